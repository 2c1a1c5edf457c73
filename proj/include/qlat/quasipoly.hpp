#pragma once

#include "qlat/oracle.hpp"

namespace qlat {

enum class FactorKind { generic, sugeno, transformed };

/// A factorization of f through a unary map. For kinds generic and sugeno
/// the pair is (p over the codomain, inner map phi) with f = p o phi; for
/// kind transformed it is (p over the domain, outer transform psi stored
/// in `phi`) with f = psi o p.
struct Factorization {
    FactorKind kind = FactorKind::generic;
    PolynomialForm p;
    UnaryMap phi;
    bool verified = false;
};

/// delta_f(c) = f(c, ..., c).
UnaryMap diagonal(const FunctionTable& f);

enum class HatMode { dnf, cnf };

/// The order-preserving binary restriction built from f by the nested
/// join-of-meets (dnf) or meet-of-joins (cnf); indexed by subset bitmask.
/// Equals f's own restriction whenever f is order-preserving.
std::vector<Element> hat(const FunctionTable& f, HatMode mode);

struct QuasiCheck {
    bool ok = true;
    long long x_index = -1;  // first failing tuple when !ok
    int coord = -1;
    std::optional<Factorization> canonical;  // present when ok and requested
    explicit operator bool() const { return ok; }
};

/// Quasi-median decomposability: f(x) = med(f(x_k:=0), delta_f(x_k),
/// f(x_k:=1)) at every (x, k).
QuasiCheck is_quasi_polynomial(const FunctionTable& f,
                               bool with_factorization = true);

struct FactorizationError : std::runtime_error {
    FactorizationError(const std::string& w, long long x_index, int coord)
        : std::runtime_error(w), x_index(x_index), coord(coord) {}
    long long x_index;
    int coord;
};

/// The (p_f, delta_f) pair, p_f being the unique polynomial extension of
/// hat(f, dnf). Throws FactorizationError when f is not quasi-polynomial.
Factorization canonical_factorization(const FunctionTable& f);

/// Pointwise composition check p o phi = f (or psi o p = f for kind
/// transformed).
bool verify_factorization(const FunctionTable& f, const Factorization& cand);

/// Every (p, phi) with p a polynomial form over the codomain, phi a
/// bracket map, and p o phi = f.
std::vector<Factorization> enumerate_factorizations(
    const FunctionTable& f, const EnumerationBudget& budget = {});

/// A (q, delta_f) factorization with q a Sugeno integral: q extends p_f's
/// binary values with both endpoints forced to the bounds.
Factorization quasi_sugeno_factorization(const FunctionTable& f);

struct QuasiPropertyReport {
    Check order_preserving;                // witness: {a index, b index}
    Check diagonal_homomorphism;           // witness: {a, b}
    Check quasi_meet_homogeneous;          // witness: {x index, c}
    Check quasi_join_homogeneous;          // witness: {x index, c}
    Check horizontally_meet_decomposable;  // f(x) = f(x v c) ^ f([x]^c)
    Check horizontally_join_decomposable;  // f(x) = f(x ^ c) v f([x]_c)
    bool comonotone_applicable = false;    // codomain is a chain
    Check quasi_comonotonic_minitive;      // witness: {x index, x' index}
    Check quasi_comonotonic_maxitive;
};

/// `with_comonotone` skips the quadratic simplex scan when the caller only
/// needs the homogeneity and horizontal-decomposition flags.
QuasiPropertyReport quasi_property_report(const FunctionTable& f,
                                          bool with_comonotone = true);

/// Idempotent lattice homomorphism with a convex range.
bool is_unary_polynomial(const UnaryMap& phi);

/// Range of delta_f equals range of f.
bool is_quasi_idempotent(const FunctionTable& f);

/// h with phi(h(y)) = y for y in phi's range, taking the minimum-index
/// preimage; entries outside the range are padded with bottom.
UnaryMap right_inverse(const UnaryMap& phi);

struct TransformedCheck {
    bool ok = false;
    bool oracle_decided = false;  // fell back to exhaustive membership
    bool diagonal_homomorphism = false;
    bool quasi_idempotent = false;
    bool quasi_polynomial = false;
    explicit operator bool() const { return ok; }
};

/// When delta_f is a homomorphism: transformed iff quasi-idempotent and
/// quasi-polynomial. Otherwise decided by exhaustive search over psi o p.
TransformedCheck is_transformed_polynomial(const FunctionTable& f,
                                           const EnumerationBudget& budget = {});

/// (psi = delta_f, p = polynomial with coefficients h(f(e_I))) where h is
/// the right-inverse of delta_f; requires a homomorphic diagonal.
Factorization transformed_factorization(const FunctionTable& f);

struct PromotionReport {
    bool range_idempotent = false;
    bool diagonal_homomorphism = false;
    bool diagonal_range_convex = false;
    bool criterion = false;   // conjunction of the three above
    bool polynomial = false;  // independent is_polynomial cross-check
};

/// Tests the criterion under which a quasi- or transformed-polynomial
/// function is already polynomial.
PromotionReport promote_to_polynomial(const FunctionTable& f);

}  // namespace qlat

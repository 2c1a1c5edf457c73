#pragma once

#include <optional>

#include "qlat/lattice.hpp"

namespace qlat {

/// A total function X^n -> Y stored densely in tuple-cursor order
/// (last coordinate varies fastest).
struct FunctionTable {
    int arity = 1;
    Lattice domain;
    Lattice codomain;
    std::vector<Element> values;

    FunctionTable() = default;
    FunctionTable(int n, Lattice dom, Lattice cod)
        : arity(n), domain(std::move(dom)), codomain(std::move(cod)),
          values(tuple_space_size(domain.size(), n), 0) {}

    long long count() const { return static_cast<long long>(values.size()); }
    Element operator()(long long index) const { return values[index]; }
    Element at(std::span<const Element> x) const {
        return values[encode_tuple(x, domain.size())];
    }
    bool endogenous() const { return domain == codomain; }

    bool operator==(const FunctionTable& o) const {
        return arity == o.arity && domain == o.domain &&
               codomain == o.codomain && values == o.values;
    }
};

/// DNF coefficients alpha: 2^[n] -> Y (bit i <-> variable i+1), with the
/// optional CNF dual beta. `canonical` marks alpha order-preserving on the
/// subset lattice, i.e. the coefficients read off a polynomial function's
/// 0/1-tuples.
struct PolynomialForm {
    int arity = 1;
    Lattice lattice;
    std::vector<Element> alpha;                 // 2^arity entries
    std::optional<std::vector<Element>> beta;   // 2^arity entries when present
    bool canonical = false;

    Element eval_dnf(std::span<const Element> x) const;
    Element eval_cnf(std::span<const Element> x) const;

    /// Tabulates eval_dnf over the whole tuple space.
    FunctionTable to_table() const;

    bool operator==(const PolynomialForm& o) const {
        return arity == o.arity && lattice == o.lattice && alpha == o.alpha;
    }
};

/// Raised by goodstein_extend on non-monotone binary data; `lo` and `hi`
/// are subset bitmasks with lo subset of hi but g(e_lo) not <= g(e_hi).
struct MonotonicityError : std::runtime_error {
    MonotonicityError(unsigned lo, unsigned hi)
        : std::runtime_error("binary restriction is not order-preserving"),
          lo(lo), hi(hi) {}
    unsigned lo, hi;
};

/// One predicate verdict; `witness` is empty when the predicate holds and
/// otherwise carries the lexicographically first counterexample (encoding
/// depends on the predicate).
struct Check {
    bool ok = true;
    std::vector<long long> witness;
    explicit operator bool() const { return ok; }
};

/// alpha[I] = f(e_I), beta[I] = f(e_{[n] minus I}); canonical flag set when
/// alpha is order-preserving on the subset lattice.
PolynomialForm canonical_forms(const FunctionTable& f);

/// Unique polynomial form agreeing with g (indexed by subset bitmask) on
/// 0/1-tuples; throws MonotonicityError when no such form exists.
PolynomialForm goodstein_extend(const std::vector<Element>& g, const Lattice& Y,
                                int arity);

/// Violating cover pair of a non-monotone map on the subset lattice.
std::optional<std::pair<unsigned, unsigned>> monotonicity_violation(
    const std::vector<Element>& g, const Lattice& Y, int arity);

/// f equals the Goodstein extension of its own binary restriction.
/// Witness: mismatching tuple index, or the two violating bitmasks
/// (as {-1, lo, hi}) when the restriction is not monotone.
Check is_polynomial(const FunctionTable& f);

/// f(x) = med(f(x_k:=0), x_k, f(x_k:=1)) for all x, k.
/// Witness: {tuple index, coordinate}.
Check is_median_decomposable(const FunctionTable& f);

/// Polynomial and fixing both bounds.
bool is_sugeno(const FunctionTable& f);

/// Order-preservation check for arbitrary tables; witness: two tuple
/// indices a <= b with f(a) not <= f(b).
Check table_order_preserving(const FunctionTable& f);

/// The homogeneity and comonotonicity ingredient predicates, each over
/// S = convex hull of the range.
struct PropertyReport {
    std::vector<Element> range;
    std::vector<Element> range_hull;
    Check order_preserving;           // witness: {a index, b index}
    Check idempotent;                 // witness: {c}
    Check meet_homogeneous;           // witness: {x index, c}
    Check join_homogeneous;           // witness: {x index, c}
    bool comonotone_applicable = false;   // domain is a chain
    Check comonotonic_minitive;       // witness: {x index, x' index}
    Check comonotonic_maxitive;
};

PropertyReport polynomial_property_report(const FunctionTable& f);

/// Both tuples lie in a common standard simplex of the chain C, i.e. some
/// coordinate permutation sorts both weakly increasing.
bool comonotone(const Lattice& C, std::span<const Element> a,
                std::span<const Element> b);

/// f = p after the inner transform: f(x) = p(phi(x_1), ..., phi(x_n)).
FunctionTable compose(const PolynomialForm& p, const UnaryMap& phi);

/// psi applied pointwise to g's values.
FunctionTable compose(const UnaryMap& psi, const FunctionTable& g);

}  // namespace qlat

#pragma once

#include <set>

#include "qlat/polyfn.hpp"

namespace qlat {

/// Caps for the brute-force enumerators. Identical seeds reproduce
/// identical sample streams.
struct EnumerationBudget {
    long long max_candidates = 1'000'000;
    long long max_checks = 4'000'000'000LL;
    uint64_t seed = 0;
};

/// One canonical form per distinct polynomial function Y^n -> Y, i.e. all
/// order-preserving maps from the subset lattice into Y.
std::vector<PolynomialForm> enumerate_polynomials(int arity, const Lattice& Y,
                                                  const EnumerationBudget& budget = {});

/// All maps X -> Y satisfying the bracket condition phi = <phi>_phi.
std::vector<UnaryMap> enumerate_bracket_maps(const Lattice& X, const Lattice& Y,
                                             const EnumerationBudget& budget = {});

/// Ground-truth set {p o phi : p polynomial over Y, phi a bracket map},
/// materialized as sorted value tables for O(log) membership queries.
class QuasiMembershipOracle {
public:
    QuasiMembershipOracle(int arity, Lattice X, Lattice Y,
                          const EnumerationBudget& budget = {});
    bool contains(const FunctionTable& f) const;
    const std::set<std::vector<Element>>& members() const { return members_; }

private:
    int arity_;
    Lattice domain_, codomain_;
    std::set<std::vector<Element>> members_;
};

/// Ground-truth set {psi o p : p polynomial over X, psi any map X -> Y}.
class TransformedMembershipOracle {
public:
    TransformedMembershipOracle(int arity, Lattice X, Lattice Y,
                                const EnumerationBudget& budget = {});
    bool contains(const FunctionTable& f) const;
    const std::set<std::vector<Element>>& members() const { return members_; }

private:
    int arity_;
    Lattice domain_, codomain_;
    std::set<std::vector<Element>> members_;
};

bool oracle_quasi_membership(const FunctionTable& f,
                             const EnumerationBudget& budget = {});
bool oracle_transformed_membership(const FunctionTable& f,
                                   const EnumerationBudget& budget = {});

/// Stream of function tables X^n -> Y: exhaustive in value-lexicographic
/// order when the space fits the candidate cap, otherwise a seeded sample
/// of max_candidates distinct tables.
class FunctionSpace {
public:
    FunctionSpace(int arity, Lattice X, Lattice Y, EnumerationBudget budget = {});

    bool exhaustive() const { return exhaustive_; }
    long long total() const { return total_; }
    FunctionTable make_blank() const;

    /// Fills `out.values` with the next table; false when the stream ends.
    /// `out` must come from make_blank().
    bool next(FunctionTable& out);

private:
    int arity_;
    Lattice domain_, codomain_;
    EnumerationBudget budget_;
    long long table_len_;
    bool exhaustive_;
    long long total_;        // tables this stream will yield
    long long emitted_ = 0;
    uint64_t counter_ = 0;   // sample candidates drawn so far
    bool started_ = false;
    std::set<std::vector<Element>> seen_;  // sampling dedup
};

}  // namespace qlat

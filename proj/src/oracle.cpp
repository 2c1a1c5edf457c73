#include "qlat/oracle.hpp"

#include <cmath>

namespace qlat {

namespace {

void enumerate_monotone(int arity, const Lattice& Y, unsigned mask,
                        std::vector<Element>& alpha,
                        std::vector<PolynomialForm>& out, long long cap) {
    if (mask == alpha.size()) {
        if (static_cast<long long>(out.size()) >= cap)
            throw BudgetError("polynomial enumeration exceeds the candidate cap");
        PolynomialForm p{arity, Y, alpha, std::nullopt, true};
        unsigned full = static_cast<unsigned>(alpha.size()) - 1;
        std::vector<Element> beta(alpha.size());
        for (unsigned I = 0; I <= full; ++I) beta[I] = alpha[full & ~I];
        p.beta = std::move(beta);
        out.push_back(std::move(p));
        return;
    }
    for (Element v = 0; v < Y.size(); ++v) {
        bool fits = true;
        for (int i = 0; i < arity && fits; ++i)
            if (mask >> i & 1u) fits = Y.leq(alpha[mask & ~(1u << i)], v);
        if (!fits) continue;
        alpha[mask] = v;
        enumerate_monotone(arity, Y, mask + 1, alpha, out, cap);
    }
}

// splitmix64 finalizer, used as a counter-based generator
uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<PolynomialForm> enumerate_polynomials(int arity, const Lattice& Y,
                                                  const EnumerationBudget& budget) {
    if (arity < 1 || arity > 8)
        throw std::invalid_argument("polynomial enumeration supports arity 1..8");
    std::vector<Element> alpha(1u << arity, 0);
    std::vector<PolynomialForm> out;
    enumerate_monotone(arity, Y, 0, alpha, out, budget.max_candidates);
    return out;
}

std::vector<UnaryMap> enumerate_bracket_maps(const Lattice& X, const Lattice& Y,
                                             const EnumerationBudget& budget) {
    double space = std::pow(static_cast<double>(Y.size()), X.size());
    if (space > static_cast<double>(budget.max_candidates))
        throw BudgetError("unary map space exceeds the candidate cap");
    std::vector<UnaryMap> out;
    std::vector<Element> table(X.size(), 0);
    do {
        UnaryMap phi{X, Y, table};
        if (bracket_condition(phi)) out.push_back(std::move(phi));
    } while (next_tuple(table, Y.size()));
    return out;
}

QuasiMembershipOracle::QuasiMembershipOracle(int arity, Lattice X, Lattice Y,
                                             const EnumerationBudget& budget)
    : arity_(arity), domain_(std::move(X)), codomain_(std::move(Y)) {
    auto polys = enumerate_polynomials(arity_, codomain_, budget);
    auto maps = enumerate_bracket_maps(domain_, codomain_, budget);
    if (static_cast<long long>(polys.size()) *
            static_cast<long long>(maps.size()) > budget.max_candidates)
        throw BudgetError("factorization search space exceeds the candidate cap");
    long long checks = 0;
    for (const auto& p : polys)
        for (const auto& phi : maps) {
            checks += tuple_space_size(domain_.size(), arity_);
            if (checks > budget.max_checks)
                throw BudgetError("membership oracle exceeds the check cap");
            members_.insert(compose(p, phi).values);
        }
}

bool QuasiMembershipOracle::contains(const FunctionTable& f) const {
    if (f.arity != arity_ || f.domain != domain_ || f.codomain != codomain_)
        throw std::invalid_argument("oracle queried with a mismatched table");
    return members_.count(f.values) != 0;
}

TransformedMembershipOracle::TransformedMembershipOracle(
    int arity, Lattice X, Lattice Y, const EnumerationBudget& budget)
    : arity_(arity), domain_(std::move(X)), codomain_(std::move(Y)) {
    auto polys = enumerate_polynomials(arity_, domain_, budget);
    double psi_space = std::pow(static_cast<double>(codomain_.size()),
                                domain_.size());
    if (psi_space > static_cast<double>(budget.max_candidates) ||
        static_cast<long long>(psi_space) *
                static_cast<long long>(polys.size()) > budget.max_candidates)
        throw BudgetError("transformed search space exceeds the candidate cap");
    std::vector<FunctionTable> poly_tables;
    poly_tables.reserve(polys.size());
    for (const auto& p : polys) poly_tables.push_back(p.to_table());
    long long checks = 0;
    std::vector<Element> psi(domain_.size(), 0);
    std::vector<Element> composed;
    do {
        for (const auto& pt : poly_tables) {
            checks += pt.count();
            if (checks > budget.max_checks)
                throw BudgetError("membership oracle exceeds the check cap");
            composed.resize(pt.values.size());
            for (size_t i = 0; i < pt.values.size(); ++i)
                composed[i] = psi[pt.values[i]];
            members_.insert(composed);
        }
    } while (next_tuple(psi, codomain_.size()));
}

bool TransformedMembershipOracle::contains(const FunctionTable& f) const {
    if (f.arity != arity_ || f.domain != domain_ || f.codomain != codomain_)
        throw std::invalid_argument("oracle queried with a mismatched table");
    return members_.count(f.values) != 0;
}

bool oracle_quasi_membership(const FunctionTable& f,
                             const EnumerationBudget& budget) {
    return QuasiMembershipOracle(f.arity, f.domain, f.codomain, budget)
        .contains(f);
}

bool oracle_transformed_membership(const FunctionTable& f,
                                   const EnumerationBudget& budget) {
    return TransformedMembershipOracle(f.arity, f.domain, f.codomain, budget)
        .contains(f);
}

FunctionSpace::FunctionSpace(int arity, Lattice X, Lattice Y,
                             EnumerationBudget budget)
    : arity_(arity), domain_(std::move(X)), codomain_(std::move(Y)),
      budget_(budget), table_len_(tuple_space_size(domain_.size(), arity)) {
    double space = std::pow(static_cast<double>(codomain_.size()),
                            static_cast<double>(table_len_));
    exhaustive_ = space <= static_cast<double>(budget_.max_candidates);
    total_ = exhaustive_ ? static_cast<long long>(space) : budget_.max_candidates;
}

FunctionTable FunctionSpace::make_blank() const {
    return FunctionTable(arity_, domain_, codomain_);
}

bool FunctionSpace::next(FunctionTable& out) {
    if (emitted_ >= total_) return false;
    if (exhaustive_) {
        if (!started_) {
            std::fill(out.values.begin(), out.values.end(), 0);
            started_ = true;
        } else if (!next_tuple(out.values, codomain_.size())) {
            return false;
        }
        ++emitted_;
        return true;
    }
    // seeded sampling; distinct tables, reproducible per (seed, counter)
    while (true) {
        uint64_t key = budget_.seed * 0x9e3779b97f4a7c15ULL + counter_;
        ++counter_;
        for (long long j = 0; j < table_len_; ++j)
            out.values[j] = static_cast<Element>(
                mix(key + 0x100000001b3ULL * static_cast<uint64_t>(j)) %
                static_cast<uint64_t>(codomain_.size()));
        if (seen_.insert(out.values).second) {
            ++emitted_;
            return true;
        }
    }
}

}  // namespace qlat

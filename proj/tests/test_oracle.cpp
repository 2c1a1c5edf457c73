#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "qlat/oracle.hpp"

using namespace qlat;

namespace {

FunctionTable threshold_composition() {
    Lattice c3 = Lattice::chain(3);
    PolynomialForm p{2, c3, {0, 1, 1, 2}, std::nullopt, true};
    UnaryMap step{c3, c3, {0, 2, 2}};
    return compose(p, step);
}

}  // namespace

TEST_CASE("enumerate_polynomials counts and canonicity") {
    Lattice c2 = Lattice::chain(2);
    Lattice c3 = Lattice::chain(3);

    auto p22 = enumerate_polynomials(2, c2);
    CHECK(p22.size() == 6);
    auto p23 = enumerate_polynomials(2, c3);
    CHECK(p23.size() == 20);
    auto p32 = enumerate_polynomials(3, c2);
    CHECK(p32.size() == 20);  // monotone boolean functions of 3 variables
    // unary: one form per ordered pair a <= b
    CHECK(enumerate_polynomials(1, c3).size() == 6);

    std::set<std::vector<Element>> tables;
    for (const auto& p : p23) {
        CHECK(p.canonical);
        CHECK_FALSE(monotonicity_violation(p.alpha, c3, 2).has_value());
        CHECK(tables.insert(p.to_table().values).second);  // no duplicates
    }
}

TEST_CASE("enumerate_polynomials honors the candidate budget") {
    EnumerationBudget tiny;
    tiny.max_candidates = 3;
    CHECK_THROWS_AS(enumerate_polynomials(2, Lattice::chain(3), tiny),
                    BudgetError);
}

TEST_CASE("enumerate_bracket_maps") {
    Lattice c2 = Lattice::chain(2);
    Lattice c3 = Lattice::chain(3);
    CHECK(enumerate_bracket_maps(c2, c2).size() == 4);  // condition vacuous

    auto maps = enumerate_bracket_maps(c3, c3);
    CHECK(maps.size() == 17);
    for (const auto& phi : maps) {
        CHECK(bracket_condition(phi));
        // every value inside [phi(0) ^ phi(2), phi(0) v phi(2)]
        for (Element c = 0; c < 3; ++c)
            CHECK(c3.in_interval(phi(c), phi(0), phi(2)));
    }
    auto excluded = [&](std::vector<Element> t) {
        for (const auto& phi : maps)
            if (phi.table == t) return false;
        return true;
    };
    CHECK(excluded({0, 2, 1}));  // phi(1) = 2 outside [0, 1]
    CHECK_FALSE(excluded({0, 0, 0}));
    CHECK_FALSE(excluded({1, 1, 1}));
    CHECK_FALSE(excluded({2, 2, 2}));
}

TEST_CASE("quasi membership oracle") {
    Lattice c2 = Lattice::chain(2);
    FunctionTable xorf(2, c2, c2);
    xorf.values = {0, 1, 1, 0};
    CHECK_FALSE(oracle_quasi_membership(xorf));

    CHECK(oracle_quasi_membership(threshold_composition()));

    // every constructed p o phi is a member
    Lattice c3 = Lattice::chain(3);
    QuasiMembershipOracle oracle(2, c3, c3);
    for (const auto& p : enumerate_polynomials(2, c3))
        for (const auto& phi : enumerate_bracket_maps(c3, c3))
            CHECK(oracle.contains(compose(p, phi)));

    FunctionTable wrong(2, c2, c3);
    CHECK_THROWS_AS(oracle.contains(wrong), std::invalid_argument);
}

TEST_CASE("transformed membership oracle") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable proj(2, c3, c3);
    proj.values = {0, 0, 0, 1, 1, 1, 2, 2, 2};
    CHECK(oracle_transformed_membership(proj));  // psi = identity

    CHECK_FALSE(oracle_transformed_membership(threshold_composition()));

    FunctionTable konst(2, c3, c3);
    konst.values.assign(9, 1);
    CHECK(oracle_transformed_membership(konst));  // psi constant
}

TEST_CASE("function space: exhaustive streams") {
    Lattice c2 = Lattice::chain(2);
    FunctionSpace s(2, c2, c2);
    CHECK(s.exhaustive());
    CHECK(s.total() == 16);
    std::set<std::vector<Element>> seen;
    FunctionTable f = s.make_blank();
    std::vector<Element> prev;
    while (s.next(f)) {
        CHECK(seen.insert(f.values).second);
        if (!prev.empty()) CHECK(prev < f.values);  // value-lex order
        prev = f.values;
    }
    CHECK(seen.size() == 16);

    FunctionSpace big(2, Lattice::chain(3), Lattice::chain(3));
    CHECK(big.exhaustive());
    CHECK(big.total() == 19683);
}

TEST_CASE("function space: seeded sampling is deterministic") {
    Lattice b2 = Lattice::boolean_algebra(2);
    Lattice c3 = Lattice::chain(3);
    EnumerationBudget budget;
    budget.max_candidates = 1000;
    budget.seed = 7;

    auto draw = [&](uint64_t seed) {
        EnumerationBudget b = budget;
        b.seed = seed;
        FunctionSpace s(2, b2, c3, b);
        CHECK_FALSE(s.exhaustive());
        std::vector<std::vector<Element>> out;
        FunctionTable f = s.make_blank();
        while (s.next(f)) out.push_back(f.values);
        return out;
    };

    auto a = draw(7), b = draw(7), c = draw(8);
    CHECK(a.size() == 1000);
    CHECK(a == b);
    CHECK(a != c);
    std::set<std::vector<Element>> distinct(a.begin(), a.end());
    CHECK(distinct.size() == a.size());
}

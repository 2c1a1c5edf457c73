#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qlat/polyfn.hpp"

using namespace qlat;

namespace {

FunctionTable table_of(int arity, const Lattice& L, std::vector<Element> values) {
    FunctionTable f(arity, L, L);
    f.values = std::move(values);
    return f;
}

FunctionTable xor_table() {
    return table_of(2, Lattice::chain(2), {0, 1, 1, 0});
}

// med(x1, 1, x2) on chain(3)
FunctionTable clipped_median() {
    Lattice c3 = Lattice::chain(3);
    FunctionTable f(2, c3, c3);
    TupleCursor cur(2, c3);
    do {
        f.values[cur.index] = c3.med(cur.tuple[0], 1, cur.tuple[1]);
    } while (cur.advance());
    return f;
}

}  // namespace

TEST_CASE("eval_dnf") {
    Lattice c3 = Lattice::chain(3);
    // projection onto x1: alpha({1}) = alpha({1,2}) = top
    PolynomialForm proj{2, c3, {0, 2, 0, 2}, std::nullopt, true};
    CHECK(proj.eval_dnf(std::vector<Element>{1, 2}) == 1);
    TupleCursor cur(2, c3);
    do {
        CHECK(proj.eval_dnf(cur.tuple) == cur.tuple[0]);
    } while (cur.advance());

    PolynomialForm konst{2, c3, {1, 1, 1, 1}, std::nullopt, true};
    do {
        CHECK(konst.eval_dnf(cur.tuple) == 1);
    } while (cur.advance());

    // ternary median on chain(2): alpha is 1 exactly on |I| >= 2
    Lattice c2 = Lattice::chain(2);
    PolynomialForm med3{3, c2, {0, 0, 0, 1, 0, 1, 1, 1}, std::nullopt, true};
    CHECK(med3.eval_dnf(std::vector<Element>{1, 0, 1}) == 1);
    TupleCursor t3(3, c2);
    do {
        CHECK(med3.eval_dnf(t3.tuple) ==
              c2.med(t3.tuple[0], t3.tuple[1], t3.tuple[2]));
    } while (t3.advance());
}

TEST_CASE("eval_cnf") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable proj = table_of(2, c3, {0, 0, 0, 1, 1, 1, 2, 2, 2});
    PolynomialForm form = canonical_forms(proj);
    REQUIRE(form.beta.has_value());
    CHECK(form.eval_cnf(std::vector<Element>{1, 2}) == 1);

    PolynomialForm konst{2, c3, {0, 0, 0, 0},
                         std::vector<Element>{1, 1, 1, 1}, false};
    CHECK(konst.eval_cnf(std::vector<Element>{0, 2}) == 1);

    PolynomialForm no_beta{2, c3, {0, 0, 0, 0}, std::nullopt, true};
    CHECK_THROWS_AS(no_beta.eval_cnf(std::vector<Element>{0, 0}),
                    std::logic_error);
}

TEST_CASE("dnf and cnf agree for canonical forms of polynomial tables") {
    Lattice c3 = Lattice::chain(3);
    std::vector<Element> alpha(4, 0);
    do {
        if (monotonicity_violation(alpha, c3, 2)) continue;
        PolynomialForm p = goodstein_extend(alpha, c3, 2);
        TupleCursor cur(2, c3);
        do {
            CHECK(p.eval_cnf(cur.tuple) == p.eval_dnf(cur.tuple));
        } while (cur.advance());
    } while (next_tuple(alpha, 3));
}

TEST_CASE("canonical_forms") {
    Lattice c2 = Lattice::chain(2);
    PolynomialForm conj = canonical_forms(table_of(2, c2, {0, 0, 0, 1}));
    CHECK(conj.alpha == std::vector<Element>{0, 0, 0, 1});
    CHECK(conj.canonical);

    PolynomialForm x = canonical_forms(xor_table());
    CHECK(x.alpha == std::vector<Element>{0, 1, 1, 0});
    CHECK(x.beta == std::vector<Element>{0, 1, 1, 0});
    CHECK_FALSE(x.canonical);

    PolynomialForm m = canonical_forms(clipped_median());
    CHECK(m.alpha == std::vector<Element>{0, 1, 1, 2});
    CHECK(m.canonical);
}

TEST_CASE("goodstein_extend") {
    Lattice c2 = Lattice::chain(2);
    CHECK_THROWS_AS(goodstein_extend({0, 1, 1, 0}, c2, 2), MonotonicityError);
    try {
        goodstein_extend({0, 1, 1, 0}, c2, 2);
    } catch (const MonotonicityError& e) {
        CHECK(e.lo == 1);  // {1} subset of {1,2} with 1 > 0
        CHECK(e.hi == 3);
    }

    PolynomialForm conj = goodstein_extend({0, 0, 0, 1}, c2, 2);
    CHECK(conj.to_table().values == std::vector<Element>{0, 0, 0, 1});
    CHECK(conj.beta == std::vector<Element>{1, 0, 0, 0});

    Lattice c3 = Lattice::chain(3);
    PolynomialForm konst = goodstein_extend({1, 1, 1, 1}, c3, 2);
    CHECK(konst.to_table().values == std::vector<Element>(9, 1));
}

TEST_CASE("goodstein uniqueness: the binary restriction pins the table") {
    // every form, canonical or not, matches the extension of its own
    // binary restriction
    Lattice c3 = Lattice::chain(3);
    std::vector<Element> alpha(4, 0);
    do {
        PolynomialForm p{2, c3, alpha, std::nullopt, false};
        FunctionTable t = p.to_table();
        std::vector<Element> g(4);
        for (unsigned I = 0; I < 4; ++I)
            g[I] = t(binary_tuple_index(I, 3, 2));
        CHECK(goodstein_extend(g, c3, 2).to_table().values == t.values);
    } while (next_tuple(alpha, 3));
}

TEST_CASE("is_polynomial") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable med3(3, c3, c3);
    TupleCursor cur(3, c3);
    do {
        med3.values[cur.index] = c3.med(cur.tuple[0], cur.tuple[1], cur.tuple[2]);
    } while (cur.advance());
    CHECK(is_polynomial(med3).ok);

    Check x = is_polynomial(xor_table());
    CHECK_FALSE(x.ok);
    CHECK(x.witness == std::vector<long long>{-1, 1, 3});

    // f(x1, x2) = delta(x1) with delta = (0, 0, 2): monotone restriction
    // but the gap at delta(1) breaks pointwise agreement
    FunctionTable gap = table_of(2, c3, {0, 0, 0, 0, 0, 0, 2, 2, 2});
    Check g = is_polynomial(gap);
    CHECK_FALSE(g.ok);
    CHECK(g.witness == std::vector<long long>{3});  // first mismatch at (1,0)
}

TEST_CASE("is_median_decomposable") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable proj = table_of(2, c3, {0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(is_median_decomposable(proj).ok);

    Check x = is_median_decomposable(xor_table());
    CHECK_FALSE(x.ok);
    // first failure at x = (0, 1), k = 1: med(f(0,1), 0, f(1,1)) = 0 != 1
    CHECK(x.witness == std::vector<long long>{1, 0});

    FunctionTable konst = table_of(2, c3, std::vector<Element>(9, 1));
    CHECK(is_median_decomposable(konst).ok);
}

TEST_CASE("is_sugeno") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable proj = table_of(2, c3, {0, 0, 0, 1, 1, 1, 2, 2, 2});
    CHECK(is_sugeno(proj));
    CHECK_FALSE(is_sugeno(table_of(2, c3, std::vector<Element>(9, 1))));
    CHECK(is_sugeno(clipped_median()));
    CHECK_FALSE(is_sugeno(xor_table()));
}

TEST_CASE("property report") {
    PropertyReport med = polynomial_property_report(clipped_median());
    CHECK(med.order_preserving.ok);
    CHECK(med.idempotent.ok);
    CHECK(med.meet_homogeneous.ok);
    CHECK(med.join_homogeneous.ok);
    CHECK(med.comonotone_applicable);
    CHECK(med.comonotonic_minitive.ok);
    CHECK(med.comonotonic_maxitive.ok);
    CHECK(med.range == std::vector<Element>{0, 1, 2});

    PropertyReport x = polynomial_property_report(xor_table());
    CHECK_FALSE(x.order_preserving.ok);

    Lattice b2 = Lattice::boolean_algebra(2);
    FunctionTable join(2, b2, b2);
    TupleCursor cur(2, b2);
    do {
        join.values[cur.index] = b2.join(cur.tuple[0], cur.tuple[1]);
    } while (cur.advance());
    PropertyReport j = polynomial_property_report(join);
    CHECK_FALSE(j.comonotone_applicable);
    CHECK(j.order_preserving.ok);
    CHECK(j.meet_homogeneous.ok);
    CHECK(j.join_homogeneous.ok);
}

TEST_CASE("table_order_preserving witnesses a violating cover pair") {
    Check x = table_order_preserving(xor_table());
    CHECK_FALSE(x.ok);
    REQUIRE(x.witness.size() == 2);
    const FunctionTable f = xor_table();
    long long a = x.witness[0], b = x.witness[1];
    std::vector<Element> xa(2), xb(2);
    decode_tuple(a, 2, xa);
    decode_tuple(b, 2, xb);
    CHECK(f.domain.leq(xa[0], xb[0]));
    CHECK(f.domain.leq(xa[1], xb[1]));
    CHECK_FALSE(f.codomain.leq(f(a), f(b)));
}

TEST_CASE("comonotone pairs on chains") {
    Lattice c3 = Lattice::chain(3);
    std::vector<Element> a{0, 1}, b{1, 2}, c{1, 0};
    CHECK(comonotone(c3, a, b));
    CHECK_FALSE(comonotone(c3, a, c));
    CHECK(comonotone(c3, a, a));
    // ties allow any arrangement on the tied coordinates
    std::vector<Element> flat{1, 1}, any{2, 0};
    CHECK(comonotone(c3, flat, any));
}

TEST_CASE("compose") {
    Lattice c3 = Lattice::chain(3);
    PolynomialForm meet{2, c3, {0, 0, 0, 2}, std::nullopt, true};
    UnaryMap step{c3, c3, {0, 2, 2}};
    FunctionTable f = compose(meet, step);
    CHECK(f.values == std::vector<Element>{0, 0, 0, 0, 2, 2, 0, 2, 2});

    UnaryMap collapse{c3, c3, {0, 0, 2}};
    FunctionTable g = compose(collapse, f);
    CHECK(g.values == std::vector<Element>{0, 0, 0, 0, 2, 2, 0, 2, 2});
}

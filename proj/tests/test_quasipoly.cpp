#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qlat/quasipoly.hpp"

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

// p = med(x1 ^ x2, 1, x1 v x2), phi = threshold step; the chain(3) analog
// of a quasi-polynomial that is not quasi-idempotent
PolynomialForm analog_p() {
    return PolynomialForm{2, Lattice::chain(3), {0, 1, 1, 2}, std::nullopt, true};
}

UnaryMap analog_phi() {
    Lattice c3 = Lattice::chain(3);
    return UnaryMap{c3, c3, {0, 2, 2}};
}

FunctionTable threshold_composition() { return compose(analog_p(), analog_phi()); }

}  // namespace

TEST_CASE("diagonal") {
    Lattice c2 = Lattice::chain(2);
    FunctionTable conj = table_of(2, c2, {0, 0, 0, 1});
    CHECK(diagonal(conj).table == std::vector<Element>{0, 1});

    CHECK(diagonal(xor_table()).table == std::vector<Element>{0, 0});

    CHECK(diagonal(threshold_composition()).table == std::vector<Element>{0, 2, 2});
}

TEST_CASE("hat") {
    FunctionTable x = xor_table();
    CHECK(hat(x, HatMode::dnf) == std::vector<Element>{0, 0, 0, 1});  // AND
    CHECK(hat(x, HatMode::cnf) == std::vector<Element>{0, 1, 1, 1});  // OR

    // order-preserving f: both modes return the binary restriction
    FunctionTable f = threshold_composition();
    std::vector<Element> restriction(4);
    for (unsigned I = 0; I < 4; ++I)
        restriction[I] = f(binary_tuple_index(I, 3, 2));
    CHECK(hat(f, HatMode::dnf) == restriction);
    CHECK(hat(f, HatMode::cnf) == restriction);
}

TEST_CASE("is_quasi_polynomial") {
    Lattice c3 = Lattice::chain(3);
    // unary maps with the bracket condition are quasi-polynomial
    for (const auto& phi : enumerate_bracket_maps(c3, c3)) {
        FunctionTable f(1, c3, c3);
        f.values = phi.table;
        CHECK(is_quasi_polynomial(f).ok);
    }

    QuasiCheck x = is_quasi_polynomial(xor_table());
    CHECK_FALSE(x.ok);
    CHECK(x.x_index == 1);
    CHECK(x.coord == 0);

    // any p o phi composition
    for (const auto& p : enumerate_polynomials(2, c3))
        for (const auto& phi : enumerate_bracket_maps(c3, c3))
            CHECK(is_quasi_polynomial(compose(p, phi), false).ok);
}

TEST_CASE("canonical_factorization") {
    Lattice c3 = Lattice::chain(3);
    // polynomial f: p_f is f's own canonical form, phi(c) = med(f(0), c, f(1))
    FunctionTable f = analog_p().to_table();
    Factorization fac = canonical_factorization(f);
    CHECK(fac.kind == FactorKind::generic);
    CHECK(fac.verified);
    CHECK(fac.p.alpha == analog_p().alpha);
    for (Element c = 0; c < 3; ++c)
        CHECK(fac.phi(c) == c3.med(f(0), c, f(f.count() - 1)));

    FunctionTable konst = table_of(2, c3, std::vector<Element>(9, 1));
    Factorization kf = canonical_factorization(konst);
    CHECK(kf.verified);
    CHECK(kf.p.to_table().values == std::vector<Element>(9, 1));
    CHECK(kf.phi.table == std::vector<Element>{1, 1, 1});

    Factorization rf = canonical_factorization(threshold_composition());
    CHECK(rf.verified);
    CHECK(verify_factorization(threshold_composition(), rf));

    CHECK_THROWS_AS(canonical_factorization(xor_table()), FactorizationError);
    try {
        canonical_factorization(xor_table());
    } catch (const FactorizationError& e) {
        CHECK(e.x_index == 1);
        CHECK(e.coord == 0);
    }
}

TEST_CASE("verify_factorization") {
    Lattice c2 = Lattice::chain(2);
    Lattice c3 = Lattice::chain(3);

    // constant f with p constant and arbitrary bracket map
    FunctionTable konst = table_of(2, c3, std::vector<Element>(9, 1));
    PolynomialForm pk{2, c3, {1, 1, 1, 1}, std::nullopt, true};
    for (const auto& phi : enumerate_bracket_maps(c3, c3))
        CHECK(verify_factorization(konst, {FactorKind::generic, pk, phi, false}));

    FunctionTable conj = table_of(2, c2, {0, 0, 0, 1});
    PolynomialForm disj{2, c2, {0, 1, 1, 1}, std::nullopt, true};
    CHECK_FALSE(verify_factorization(
        conj, {FactorKind::generic, disj, UnaryMap::identity(c2), false}));

    PolynomialForm wrong_arity{1, c2, {0, 1}, std::nullopt, true};
    CHECK_THROWS_AS(
        verify_factorization(conj, {FactorKind::generic, wrong_arity,
                                    UnaryMap::identity(c2), false}),
        std::invalid_argument);
}

TEST_CASE("enumerate_factorizations") {
    Lattice c2 = Lattice::chain(2);
    Lattice c3 = Lattice::chain(3);

    // constant: (p = c, any bracket map) and (idempotent-diagonal p, phi = c
    // with <c>_p = c) are all present
    FunctionTable konst = table_of(2, c3, std::vector<Element>(9, 1));
    auto all = enumerate_factorizations(konst);
    auto has = [&](const std::vector<Element>& ptab,
                   const std::vector<Element>& phitab) {
        for (const auto& fac : all)
            if (fac.p.to_table().values == ptab && fac.phi.table == phitab)
                return true;
        return false;
    };
    int n_bracket_maps = static_cast<int>(enumerate_bracket_maps(c3, c3).size());
    int with_constant_p = 0;
    for (const auto& fac : all) {
        CHECK(fac.verified);
        if (fac.p.to_table().values == std::vector<Element>(9, 1))
            ++with_constant_p;
    }
    CHECK(with_constant_p == n_bracket_maps);
    // med(x1 ^ x2, 1, x1 v x2) has idempotent diagonal; phi = 1 works
    CHECK(has(analog_p().to_table().values, {1, 1, 1}));

    // unary identity factors through (id, id) at minimum
    FunctionTable id1(1, c2, c2);
    id1.values = {0, 1};
    auto idfac = enumerate_factorizations(id1);
    bool found_id = false;
    for (const auto& fac : idfac)
        found_id = found_id || (fac.p.to_table().values == std::vector<Element>{0, 1} &&
                                fac.phi.table == std::vector<Element>{0, 1});
    CHECK(found_id);

    // the analog's list contains both the constructing and canonical pairs
    auto rfacs = enumerate_factorizations(threshold_composition());
    CHECK_FALSE(rfacs.empty());
    bool constructing = false, canonical = false;
    Factorization cf = canonical_factorization(threshold_composition());
    for (const auto& fac : rfacs) {
        constructing = constructing || (fac.p == analog_p() &&
                                        fac.phi.table == analog_phi().table);
        canonical = canonical ||
                    (fac.p == cf.p && fac.phi.table == cf.phi.table);
    }
    CHECK(constructing);
    CHECK(canonical);

    // XOR admits no factorization at all
    CHECK(enumerate_factorizations(xor_table()).empty());
}

TEST_CASE("quasi_sugeno_factorization") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable konst = table_of(2, c3, std::vector<Element>(9, 1));
    Factorization qf = quasi_sugeno_factorization(konst);
    CHECK(qf.kind == FactorKind::sugeno);
    CHECK(qf.verified);
    CHECK(qf.p.alpha == std::vector<Element>{0, 1, 1, 2});
    CHECK(is_sugeno(qf.p.to_table()));
    CHECK(qf.phi.table == std::vector<Element>{1, 1, 1});

    // an existing Sugeno integral keeps its own form
    FunctionTable med = analog_p().to_table();
    Factorization mf = quasi_sugeno_factorization(med);
    CHECK(mf.verified);
    CHECK(mf.p.alpha == analog_p().alpha);

    Factorization rf = quasi_sugeno_factorization(threshold_composition());
    CHECK(rf.verified);
    CHECK(is_sugeno(rf.p.to_table()));
    CHECK(compose(rf.p, rf.phi).values == threshold_composition().values);
}

TEST_CASE("quasi_property_report") {
    // Sugeno p composed with a homomorphic diagonal: all six predicates hold
    FunctionTable f = threshold_composition();
    QuasiPropertyReport rep = quasi_property_report(f);
    CHECK(rep.order_preserving.ok);
    CHECK(rep.diagonal_homomorphism.ok);
    CHECK(rep.quasi_meet_homogeneous.ok);
    CHECK(rep.quasi_join_homogeneous.ok);
    CHECK(rep.horizontally_meet_decomposable.ok);
    CHECK(rep.horizontally_join_decomposable.ok);
    CHECK(rep.comonotone_applicable);
    CHECK(rep.quasi_comonotonic_minitive.ok);
    CHECK(rep.quasi_comonotonic_maxitive.ok);

    // XOR: f((1,0) v 1) = 0 but f(1,0) v delta(1) = 1
    QuasiPropertyReport x = quasi_property_report(xor_table());
    CHECK_FALSE(x.quasi_join_homogeneous.ok);

    Lattice c3 = Lattice::chain(3);
    FunctionTable id1(1, c3, c3);
    id1.values = {0, 1, 2};
    QuasiPropertyReport i = quasi_property_report(id1);
    CHECK(i.order_preserving.ok);
    CHECK(i.quasi_meet_homogeneous.ok);
    CHECK(i.quasi_join_homogeneous.ok);
    CHECK(i.horizontally_meet_decomposable.ok);
    CHECK(i.horizontally_join_decomposable.ok);
    CHECK(i.quasi_comonotonic_minitive.ok);
    CHECK(i.quasi_comonotonic_maxitive.ok);
}

TEST_CASE("is_unary_polynomial") {
    Lattice c3 = Lattice::chain(3);
    CHECK(is_unary_polynomial(UnaryMap::identity(c3)));
    CHECK_FALSE(is_unary_polynomial(UnaryMap{c3, c3, {0, 0, 2}}));  // range gap
    CHECK(is_unary_polynomial(UnaryMap{c3, c3, {0, 1, 1}}));  // x ^ 1
}

TEST_CASE("is_quasi_idempotent") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable f = threshold_composition();
    CHECK_FALSE(is_quasi_idempotent(f));
    // the witness value: f(top, 0) = 1 is outside R_delta = {0, 2}
    CHECK(f(encode_tuple(std::vector<Element>{2, 0}, 3)) == 1);

    CHECK(is_quasi_idempotent(analog_p().to_table()));
    CHECK(is_quasi_idempotent(table_of(2, c3, std::vector<Element>(9, 1))));
}

TEST_CASE("right_inverse") {
    Lattice c3 = Lattice::chain(3);
    UnaryMap rev{c3, c3, {2, 1, 0}};  // bijection
    CHECK(right_inverse(rev).table == std::vector<Element>{2, 1, 0});

    UnaryMap gap{c3, c3, {0, 0, 2}};
    UnaryMap h = right_inverse(gap);
    CHECK(h(0) == 0);
    CHECK(h(2) == 2);

    UnaryMap konst = UnaryMap::constant(c3, c3, 1);
    CHECK(right_inverse(konst)(1) == 0);  // min-index tie-break

    // phi o h = identity on the range, for every map
    std::vector<Element> t(3, 0);
    do {
        UnaryMap phi{c3, c3, t};
        UnaryMap hh = right_inverse(phi);
        for (Element y : range_of(phi.table)) CHECK(phi(hh(y)) == y);
    } while (next_tuple(t, 3));
}

TEST_CASE("is_transformed_polynomial") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable poly = analog_p().to_table();
    TransformedCheck t = is_transformed_polynomial(poly);
    CHECK(t.ok);
    CHECK(t.diagonal_homomorphism);
    CHECK_FALSE(t.oracle_decided);

    TransformedCheck r = is_transformed_polynomial(threshold_composition());
    CHECK_FALSE(r.ok);
    CHECK(r.quasi_polynomial);
    CHECK_FALSE(r.quasi_idempotent);

    // delta o p with delta = x ^ 1, p = x1 v x2
    PolynomialForm disj{2, c3, {0, 2, 2, 2}, std::nullopt, true};
    UnaryMap retract{c3, c3, {0, 1, 1}};
    FunctionTable g = compose(retract, disj.to_table());
    CHECK(is_transformed_polynomial(g).ok);
}

TEST_CASE("transformed_factorization") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable poly = analog_p().to_table();
    Factorization pf = transformed_factorization(poly);
    CHECK(pf.kind == FactorKind::transformed);
    CHECK(pf.verified);
    // the diagonal of a polynomial table is its own bracket map
    for (Element c = 0; c < 3; ++c)
        CHECK(pf.phi(c) == c3.med(poly(0), c, poly(poly.count() - 1)));

    PolynomialForm disj{2, c3, {0, 2, 2, 2}, std::nullopt, true};
    UnaryMap retract{c3, c3, {0, 1, 1}};
    FunctionTable g = compose(retract, disj.to_table());
    Factorization gf = transformed_factorization(g);
    CHECK(gf.verified);
    CHECK(compose(gf.phi, gf.p.to_table()).values == g.values);

    FunctionTable konst = table_of(2, c3, std::vector<Element>(9, 1));
    Factorization kf = transformed_factorization(konst);
    CHECK(kf.verified);
    CHECK(kf.phi.table == std::vector<Element>{1, 1, 1});

    CHECK_THROWS_AS(transformed_factorization(threshold_composition()),
                    std::invalid_argument);
}

TEST_CASE("promote_to_polynomial") {
    Lattice c3 = Lattice::chain(3);
    FunctionTable poly = analog_p().to_table();
    PromotionReport p = promote_to_polynomial(poly);
    CHECK(p.criterion);
    CHECK(p.polynomial);

    PromotionReport r = promote_to_polynomial(threshold_composition());
    CHECK_FALSE(r.range_idempotent);  // delta skips the middle value
    CHECK_FALSE(r.criterion);
    CHECK_FALSE(r.polynomial);

    // non-convex diagonal range
    PolynomialForm disj{2, c3, {0, 2, 2, 2}, std::nullopt, true};
    UnaryMap gap{c3, c3, {0, 0, 2}};
    FunctionTable g = compose(gap, disj.to_table());
    PromotionReport gr = promote_to_polynomial(g);
    CHECK_FALSE(gr.diagonal_range_convex);
    CHECK_FALSE(gr.criterion);
    CHECK_FALSE(gr.polynomial);

    CHECK_THROWS_AS(promote_to_polynomial(xor_table()), std::invalid_argument);
}

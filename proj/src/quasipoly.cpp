#include "qlat/quasipoly.hpp"

#include <algorithm>

namespace qlat {

UnaryMap diagonal(const FunctionTable& f) {
    UnaryMap d{f.domain, f.codomain, std::vector<Element>(f.domain.size())};
    long long stride = 0;  // index of (c,...,c) is c * stride
    for (int i = 0; i < f.arity; ++i) stride = stride * f.domain.size() + 1;
    for (Element c = 0; c < f.domain.size(); ++c) d.table[c] = f(c * stride);
    return d;
}

std::vector<Element> hat(const FunctionTable& f, HatMode mode) {
    const Lattice& Y = f.codomain;
    int n = f.arity;
    int base = f.domain.size();
    unsigned full = (1u << n) - 1;
    std::vector<Element> out(1u << n);
    // binary values of f, indexed by subset bitmask
    std::vector<Element> fe(1u << n);
    for (unsigned I = 0; I <= full; ++I)
        fe[I] = f(binary_tuple_index(I, base, n));

    for (unsigned e = 0; e <= full; ++e) {
        unsigned ones = e, zeros = full & ~e;
        if (mode == HatMode::dnf) {
            // join over assignments to the e_i = 1 coordinates of meets
            // over assignments to the e_i = 0 coordinates
            Element acc = Y.bottom();
            unsigned A = ones;
            while (true) {
                Element inner = Y.top();
                unsigned B = zeros;
                while (true) {
                    inner = Y.meet(inner, fe[A | B]);
                    if (B == 0) break;
                    B = (B - 1) & zeros;
                }
                acc = Y.join(acc, inner);
                if (A == 0) break;
                A = (A - 1) & ones;
            }
            out[e] = acc;
        } else {
            Element acc = Y.top();
            unsigned B = zeros;
            while (true) {
                Element inner = Y.bottom();
                unsigned A = ones;
                while (true) {
                    inner = Y.join(inner, fe[A | B]);
                    if (A == 0) break;
                    A = (A - 1) & ones;
                }
                acc = Y.meet(acc, inner);
                if (B == 0) break;
                B = (B - 1) & zeros;
            }
            out[e] = acc;
        }
    }
    return out;
}

QuasiCheck is_quasi_polynomial(const FunctionTable& f, bool with_factorization) {
    const Lattice& Y = f.codomain;
    UnaryMap delta = diagonal(f);
    TupleCursor cur(f.arity, f.domain);
    std::vector<Element> y(f.arity);
    do {
        for (int k = 0; k < f.arity; ++k) {
            y = cur.tuple;
            y[k] = f.domain.bottom();
            Element at_bot = f.at(y);
            y[k] = f.domain.top();
            Element at_top = f.at(y);
            if (Y.med(at_bot, delta(cur.tuple[k]), at_top) != f(cur.index))
                return {false, cur.index, k, std::nullopt};
        }
    } while (cur.advance());
    QuasiCheck ok;
    if (with_factorization) ok.canonical = canonical_factorization(f);
    return ok;
}

Factorization canonical_factorization(const FunctionTable& f) {
    QuasiCheck qc = is_quasi_polynomial(f, /*with_factorization=*/false);
    if (!qc)
        throw FactorizationError("not a quasi-polynomial function",
                                 qc.x_index, qc.coord);
    // hat(f, dnf) is always order-preserving, so the extension exists
    PolynomialForm pf = goodstein_extend(hat(f, HatMode::dnf), f.codomain, f.arity);
    Factorization fac{FactorKind::generic, std::move(pf), diagonal(f), false};
    fac.verified = verify_factorization(f, fac);
    return fac;
}

bool verify_factorization(const FunctionTable& f, const Factorization& cand) {
    if (cand.p.arity != f.arity || cand.phi.domain != f.domain ||
        cand.phi.codomain != f.codomain)
        throw std::invalid_argument("factorization does not match the table");
    if (cand.kind == FactorKind::transformed) {
        if (cand.p.lattice != f.domain)
            throw std::invalid_argument("transformed factorization needs p over the domain");
        return compose(cand.phi, cand.p.to_table()).values == f.values;
    }
    if (cand.p.lattice != f.codomain)
        throw std::invalid_argument("factorization needs p over the codomain");
    return compose(cand.p, cand.phi).values == f.values;
}

std::vector<Factorization> enumerate_factorizations(const FunctionTable& f,
                                                    const EnumerationBudget& budget) {
    auto polys = enumerate_polynomials(f.arity, f.codomain, budget);
    auto maps = enumerate_bracket_maps(f.domain, f.codomain, budget);
    if (static_cast<long long>(polys.size()) *
            static_cast<long long>(maps.size()) > budget.max_candidates)
        throw BudgetError("factorization search space exceeds the candidate cap");
    std::vector<Factorization> out;
    for (const auto& p : polys)
        for (const auto& phi : maps)
            if (compose(p, phi).values == f.values)
                out.push_back({FactorKind::generic, p, phi, true});
    return out;
}

Factorization quasi_sugeno_factorization(const FunctionTable& f) {
    Factorization canonical = canonical_factorization(f);
    std::vector<Element> g = canonical.p.alpha;
    g.front() = f.codomain.bottom();
    g.back() = f.codomain.top();
    // p_f's binary values sit between p_f(0) and p_f(1), so forcing the
    // endpoints keeps g order-preserving
    PolynomialForm q = goodstein_extend(g, f.codomain, f.arity);
    Factorization fac{FactorKind::sugeno, std::move(q), diagonal(f), false};
    fac.verified = verify_factorization(f, fac);
    return fac;
}

QuasiPropertyReport quasi_property_report(const FunctionTable& f,
                                          bool with_comonotone) {
    const Lattice& X = f.domain;
    const Lattice& Y = f.codomain;
    QuasiPropertyReport rep;
    rep.order_preserving = table_order_preserving(f);
    UnaryMap delta = diagonal(f);
    for (Element a = 0; a < X.size() && rep.diagonal_homomorphism.ok; ++a)
        for (Element b = a + 1; b < X.size(); ++b)
            if (delta(X.meet(a, b)) != Y.meet(delta(a), delta(b)) ||
                delta(X.join(a, b)) != Y.join(delta(a), delta(b))) {
                rep.diagonal_homomorphism = {false, {a, b}};
                break;
            }

    TupleCursor cur(f.arity, f.domain);
    std::vector<Element> y(f.arity);
    do {
        Element fx = f(cur.index);
        for (Element c = 0; c < X.size(); ++c) {
            if (rep.quasi_meet_homogeneous.ok) {
                y = meet_const(X, cur.tuple, c);
                if (f.at(y) != Y.meet(fx, delta(c)))
                    rep.quasi_meet_homogeneous = {false, {cur.index, c}};
            }
            if (rep.quasi_join_homogeneous.ok) {
                y = join_const(X, cur.tuple, c);
                if (f.at(y) != Y.join(fx, delta(c)))
                    rep.quasi_join_homogeneous = {false, {cur.index, c}};
            }
            if (rep.horizontally_meet_decomposable.ok) {
                y = join_const(X, cur.tuple, c);
                Element hi = f.at(y);
                y = clip_ceil(X, cur.tuple, c);
                if (fx != Y.meet(hi, f.at(y)))
                    rep.horizontally_meet_decomposable = {false, {cur.index, c}};
            }
            if (rep.horizontally_join_decomposable.ok) {
                y = meet_const(X, cur.tuple, c);
                Element lo = f.at(y);
                y = clip_floor(X, cur.tuple, c);
                if (fx != Y.join(lo, f.at(y)))
                    rep.horizontally_join_decomposable = {false, {cur.index, c}};
            }
        }
    } while (cur.advance());

    rep.comonotone_applicable = Y.is_chain() && f.arity <= 4;
    if (rep.comonotone_applicable && with_comonotone) {
        std::vector<Element> da(f.arity), db(f.arity), m(f.arity), j(f.arity);
        TupleCursor a(f.arity, f.domain);
        do {
            for (int i = 0; i < f.arity; ++i) da[i] = delta(a.tuple[i]);
            TupleCursor b(f.arity, f.domain);
            do {
                for (int i = 0; i < f.arity; ++i) db[i] = delta(b.tuple[i]);
                if (!comonotone(Y, da, db)) continue;
                for (int i = 0; i < f.arity; ++i) {
                    m[i] = X.meet(a.tuple[i], b.tuple[i]);
                    j[i] = X.join(a.tuple[i], b.tuple[i]);
                }
                if (rep.quasi_comonotonic_minitive.ok &&
                    f.at(m) != Y.meet(f(a.index), f(b.index)))
                    rep.quasi_comonotonic_minitive = {false, {a.index, b.index}};
                if (rep.quasi_comonotonic_maxitive.ok &&
                    f.at(j) != Y.join(f(a.index), f(b.index)))
                    rep.quasi_comonotonic_maxitive = {false, {a.index, b.index}};
            } while ((rep.quasi_comonotonic_minitive.ok ||
                      rep.quasi_comonotonic_maxitive.ok) &&
                     b.advance());
        } while ((rep.quasi_comonotonic_minitive.ok ||
                  rep.quasi_comonotonic_maxitive.ok) &&
                 a.advance());
    }
    return rep;
}

bool is_unary_polynomial(const UnaryMap& phi) {
    if (phi.domain != phi.codomain)
        throw std::invalid_argument("unary polynomial test needs domain = codomain");
    for (Element x = 0; x < phi.domain.size(); ++x)
        if (phi(phi(x)) != phi(x)) return false;
    if (!is_homomorphism(phi)) return false;
    std::vector<Element> r = range_of(phi.table);
    return r == phi.codomain.convex_hull(r);
}

bool is_quasi_idempotent(const FunctionTable& f) {
    return range_of(diagonal(f).table) == range_of(f.values);
}

UnaryMap right_inverse(const UnaryMap& phi) {
    UnaryMap h{phi.codomain, phi.domain,
               std::vector<Element>(phi.codomain.size(), phi.domain.bottom())};
    std::vector<bool> hit(phi.codomain.size(), false);
    for (Element x = 0; x < phi.domain.size(); ++x) {
        Element y = phi(x);
        if (!hit[y]) {
            hit[y] = true;
            h.table[y] = x;  // minimum-index preimage
        }
    }
    return h;
}

TransformedCheck is_transformed_polynomial(const FunctionTable& f,
                                           const EnumerationBudget& budget) {
    TransformedCheck c;
    UnaryMap delta = diagonal(f);
    c.diagonal_homomorphism = is_homomorphism(delta);
    c.quasi_idempotent = is_quasi_idempotent(f);
    if (c.diagonal_homomorphism) {
        c.quasi_polynomial = is_quasi_polynomial(f, false).ok;
        c.ok = c.quasi_idempotent && c.quasi_polynomial;
    } else {
        c.oracle_decided = true;
        c.ok = oracle_transformed_membership(f, budget);
    }
    return c;
}

Factorization transformed_factorization(const FunctionTable& f) {
    TransformedCheck c = is_transformed_polynomial(f);
    if (!c.diagonal_homomorphism)
        throw std::invalid_argument(
            "transformed factorization needs a homomorphic diagonal");
    if (!c.ok)
        throw std::invalid_argument("not a transformed polynomial function");
    UnaryMap delta = diagonal(f);
    UnaryMap h = right_inverse(delta);
    int n = f.arity;
    unsigned full = (1u << n) - 1;
    std::vector<Element> alpha(1u << n);
    for (unsigned I = 0; I <= full; ++I)
        alpha[I] = h(f(binary_tuple_index(I, f.domain.size(), n)));
    PolynomialForm p{n, f.domain, std::move(alpha), std::nullopt, false};
    if (!monotonicity_violation(p.alpha, f.domain, n)) {
        p.canonical = true;
        std::vector<Element> beta(p.alpha.size());
        for (unsigned I = 0; I <= full; ++I) beta[I] = p.alpha[full & ~I];
        p.beta = std::move(beta);
    }
    Factorization fac{FactorKind::transformed, std::move(p), std::move(delta),
                      false};
    fac.verified = verify_factorization(f, fac);
    return fac;
}

PromotionReport promote_to_polynomial(const FunctionTable& f) {
    if (!f.endogenous())
        throw std::invalid_argument("promotion test needs domain = codomain");
    if (!is_quasi_polynomial(f, false).ok && !is_transformed_polynomial(f).ok)
        throw std::invalid_argument(
            "promotion test needs a quasi- or transformed-polynomial input");
    PromotionReport rep;
    UnaryMap delta = diagonal(f);
    rep.range_idempotent = true;
    for (Element c : range_of(f.values))
        if (delta(c) != c) {
            rep.range_idempotent = false;
            break;
        }
    rep.diagonal_homomorphism = is_homomorphism(delta);
    std::vector<Element> r = range_of(delta.table);
    rep.diagonal_range_convex = r == f.codomain.convex_hull(r);
    rep.criterion = rep.range_idempotent && rep.diagonal_homomorphism &&
                    rep.diagonal_range_convex;
    rep.polynomial = is_polynomial(f).ok;
    return rep;
}

}  // namespace qlat

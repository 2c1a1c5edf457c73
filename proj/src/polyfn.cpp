#include "qlat/polyfn.hpp"

#include <algorithm>
#include <numeric>

namespace qlat {

Element PolynomialForm::eval_dnf(std::span<const Element> x) const {
    const Lattice& L = lattice;
    Element acc = L.bottom();
    for (unsigned I = 0; I < alpha.size(); ++I) {
        Element term = alpha[I];
        for (int i = 0; i < arity && term != L.bottom(); ++i)
            if (I >> i & 1u) term = L.meet(term, x[i]);
        acc = L.join(acc, term);
    }
    return acc;
}

Element PolynomialForm::eval_cnf(std::span<const Element> x) const {
    if (!beta) throw std::logic_error("polynomial form has no CNF coefficients");
    const Lattice& L = lattice;
    Element acc = L.top();
    for (unsigned I = 0; I < beta->size(); ++I) {
        Element term = (*beta)[I];
        for (int i = 0; i < arity && term != L.top(); ++i)
            if (I >> i & 1u) term = L.join(term, x[i]);
        acc = L.meet(acc, term);
    }
    return acc;
}

FunctionTable PolynomialForm::to_table() const {
    FunctionTable f(arity, lattice, lattice);
    std::vector<Element> x(arity, 0);
    long long idx = 0;
    do {
        f.values[idx++] = eval_dnf(x);
    } while (next_tuple(x, lattice.size()));
    return f;
}

std::optional<std::pair<unsigned, unsigned>> monotonicity_violation(
    const std::vector<Element>& g, const Lattice& Y, int arity) {
    // covers suffice: I subset I|{i}
    unsigned full = (1u << arity) - 1;
    for (unsigned I = 0; I <= full; ++I)
        for (int i = 0; i < arity; ++i) {
            if (I >> i & 1u) continue;
            unsigned J = I | (1u << i);
            if (!Y.leq(g[I], g[J])) return std::make_pair(I, J);
        }
    return std::nullopt;
}

PolynomialForm goodstein_extend(const std::vector<Element>& g, const Lattice& Y,
                                int arity) {
    if (g.size() != (1u << arity))
        throw std::invalid_argument("binary data must have 2^n entries");
    if (auto bad = monotonicity_violation(g, Y, arity))
        throw MonotonicityError(bad->first, bad->second);
    PolynomialForm p{arity, Y, g, std::nullopt, true};
    unsigned full = (1u << arity) - 1;
    std::vector<Element> b(g.size());
    for (unsigned I = 0; I <= full; ++I) b[I] = g[full & ~I];
    p.beta = std::move(b);
    return p;
}

PolynomialForm canonical_forms(const FunctionTable& f) {
    if (!f.endogenous())
        throw std::invalid_argument("canonical forms need domain = codomain");
    int n = f.arity;
    unsigned full = (1u << n) - 1;
    std::vector<Element> alpha(1u << n), beta(1u << n);
    for (unsigned I = 0; I <= full; ++I) {
        alpha[I] = f(binary_tuple_index(I, f.domain.size(), n));
        beta[I] = f(binary_tuple_index(full & ~I, f.domain.size(), n));
    }
    bool canonical = !monotonicity_violation(alpha, f.codomain, n).has_value();
    return PolynomialForm{n, f.codomain, std::move(alpha), std::move(beta),
                          canonical};
}

Check is_polynomial(const FunctionTable& f) {
    PolynomialForm form = canonical_forms(f);
    if (!form.canonical) {
        auto bad = monotonicity_violation(form.alpha, f.codomain, f.arity);
        return {false, {-1, bad->first, bad->second}};
    }
    TupleCursor cur(f.arity, f.domain);
    do {
        if (form.eval_dnf(cur.tuple) != f(cur.index))
            return {false, {cur.index}};
    } while (cur.advance());
    return {};
}

Check is_median_decomposable(const FunctionTable& f) {
    if (!f.endogenous())
        throw std::invalid_argument("median decomposability needs domain = codomain");
    const Lattice& L = f.domain;
    TupleCursor cur(f.arity, f.domain);
    std::vector<Element> y(f.arity);
    do {
        for (int k = 0; k < f.arity; ++k) {
            y = cur.tuple;
            y[k] = L.bottom();
            Element at_bot = f.at(y);
            y[k] = L.top();
            Element at_top = f.at(y);
            if (L.med(at_bot, cur.tuple[k], at_top) != f(cur.index))
                return {false, {cur.index, k}};
        }
    } while (cur.advance());
    return {};
}

bool is_sugeno(const FunctionTable& f) {
    if (!is_polynomial(f)) return false;
    return f(0) == f.codomain.bottom() &&
           f(f.count() - 1) == f.codomain.top();
}

Check table_order_preserving(const FunctionTable& f) {
    const Lattice& X = f.domain;
    const Lattice& Y = f.codomain;
    // it is enough to compare each tuple against its upward covers per
    // coordinate
    TupleCursor cur(f.arity, f.domain);
    std::vector<Element> y(f.arity);
    do {
        for (int k = 0; k < f.arity; ++k) {
            for (Element c = 0; c < X.size(); ++c) {
                if (c == cur.tuple[k] || !X.leq(cur.tuple[k], c)) continue;
                y = cur.tuple;
                y[k] = c;
                if (!Y.leq(f(cur.index), f.at(y)))
                    return {false, {cur.index, encode_tuple(y, X.size())}};
            }
        }
    } while (cur.advance());
    return {};
}

bool comonotone(const Lattice& C, std::span<const Element> a,
                std::span<const Element> b) {
    // on a chain a common sorting permutation exists iff ordering the
    // coordinates by (a_i, b_i) lexicographically sorts both tuples
    int n = static_cast<int>(a.size());
    std::array<int, 8> ord{};
    std::iota(ord.begin(), ord.begin() + n, 0);
    std::sort(ord.begin(), ord.begin() + n, [&](int i, int j) {
        if (a[i] != a[j]) return a[i] < a[j];
        return b[i] < b[j];
    });
    for (int i = 0; i + 1 < n; ++i) {
        if (!C.leq(a[ord[i]], a[ord[i + 1]])) return false;
        if (!C.leq(b[ord[i]], b[ord[i + 1]])) return false;
    }
    return true;
}

FunctionTable compose(const PolynomialForm& p, const UnaryMap& phi) {
    if (phi.codomain != p.lattice)
        throw std::invalid_argument("compose: phi must map into p's lattice");
    FunctionTable f(p.arity, phi.domain, p.lattice);
    TupleCursor cur(p.arity, phi.domain);
    std::vector<Element> y(p.arity);
    do {
        for (int i = 0; i < p.arity; ++i) y[i] = phi(cur.tuple[i]);
        f.values[cur.index] = p.eval_dnf(y);
    } while (cur.advance());
    return f;
}

FunctionTable compose(const UnaryMap& psi, const FunctionTable& g) {
    if (psi.domain != g.codomain)
        throw std::invalid_argument("compose: psi must consume g's codomain");
    FunctionTable f(g.arity, g.domain, psi.codomain);
    for (long long i = 0; i < g.count(); ++i) f.values[i] = psi(g(i));
    return f;
}

PropertyReport polynomial_property_report(const FunctionTable& f) {
    if (!f.endogenous())
        throw std::invalid_argument("property report needs domain = codomain");
    const Lattice& L = f.domain;
    PropertyReport rep;
    rep.range = range_of(f.values);
    rep.range_hull = L.convex_hull(rep.range);
    rep.order_preserving = table_order_preserving(f);

    long long diag_stride = 0;  // index of (c,...,c) is c * stride
    for (int i = 0; i < f.arity; ++i)
        diag_stride = diag_stride * L.size() + 1;
    for (Element c : rep.range_hull)
        if (f(c * diag_stride) != c) {
            rep.idempotent = {false, {c}};
            break;
        }

    TupleCursor cur(f.arity, f.domain);
    std::vector<Element> y(f.arity);
    do {
        for (Element c : rep.range_hull) {
            if (rep.meet_homogeneous.ok) {
                y = meet_const(L, cur.tuple, c);
                if (f.at(y) != L.meet(f(cur.index), c))
                    rep.meet_homogeneous = {false, {cur.index, c}};
            }
            if (rep.join_homogeneous.ok) {
                y = join_const(L, cur.tuple, c);
                if (f.at(y) != L.join(f(cur.index), c))
                    rep.join_homogeneous = {false, {cur.index, c}};
            }
        }
    } while ((rep.meet_homogeneous.ok || rep.join_homogeneous.ok) && cur.advance());

    rep.comonotone_applicable = L.is_chain() && f.arity <= 4;
    if (rep.comonotone_applicable) {
        TupleCursor a(f.arity, f.domain);
        std::vector<Element> m(f.arity), j(f.arity);
        do {
            TupleCursor b(f.arity, f.domain);
            do {
                if (!comonotone(L, a.tuple, b.tuple)) continue;
                for (int i = 0; i < f.arity; ++i) {
                    m[i] = L.meet(a.tuple[i], b.tuple[i]);
                    j[i] = L.join(a.tuple[i], b.tuple[i]);
                }
                if (rep.comonotonic_minitive.ok &&
                    f.at(m) != L.meet(f(a.index), f(b.index)))
                    rep.comonotonic_minitive = {false, {a.index, b.index}};
                if (rep.comonotonic_maxitive.ok &&
                    f.at(j) != L.join(f(a.index), f(b.index)))
                    rep.comonotonic_maxitive = {false, {a.index, b.index}};
            } while ((rep.comonotonic_minitive.ok || rep.comonotonic_maxitive.ok) &&
                     b.advance());
        } while ((rep.comonotonic_minitive.ok || rep.comonotonic_maxitive.ok) &&
                 a.advance());
    }
    return rep;
}

}  // namespace qlat

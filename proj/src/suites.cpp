#include "qlat/suites.hpp"

#include <functional>
#include <sstream>

namespace qlat::suites {

namespace {

struct Space {
    int arity;
    Lattice X;
    Lattice Y;
    bool sampled;
    std::string name;
};

std::string space_name(int arity, const std::string& x, const std::string& y,
                       bool sampled) {
    return x + "^" + std::to_string(arity) + "->" + y +
           (sampled ? " (sampled)" : "");
}

Space chain_space(int arity, int xk, int yk) {
    return {arity, Lattice::chain(xk), Lattice::chain(yk), false,
            space_name(arity, "chain(" + std::to_string(xk) + ")",
                       "chain(" + std::to_string(yk) + ")", false)};
}

// Endogenous spaces for the polynomial criteria: chains plus a sampled
// boolean square.
std::vector<Space> polynomial_spaces(const SuiteConfig& cfg, bool chains_only) {
    std::vector<Space> out;
    if (cfg.max_elems >= 2 && cfg.max_arity >= 2) out.push_back(chain_space(2, 2, 2));
    if (cfg.max_elems >= 2 && cfg.max_arity >= 3) out.push_back(chain_space(3, 2, 2));
    if (cfg.max_elems >= 3 && cfg.max_arity >= 2) out.push_back(chain_space(2, 3, 3));
    if (!chains_only && cfg.max_arity >= 2) {
        Lattice b2 = Lattice::boolean_algebra(2);
        out.push_back({2, b2, b2, true,
                       space_name(2, "boolean(2)", "boolean(2)", true)});
    }
    return out;
}

// Mixed chain pairs for the quasi-polynomial criteria.
std::vector<Space> quasi_spaces(const SuiteConfig& cfg) {
    std::vector<Space> out;
    if (cfg.max_elems >= 2 && cfg.max_arity >= 2) out.push_back(chain_space(2, 2, 2));
    if (cfg.max_elems >= 2 && cfg.max_arity >= 3) out.push_back(chain_space(3, 2, 2));
    if (cfg.max_elems >= 3 && cfg.max_arity >= 2) {
        out.push_back(chain_space(2, 3, 3));
        out.push_back(chain_space(2, 3, 2));
        out.push_back(chain_space(2, 2, 3));
    }
    return out;
}

std::string show_values(const std::vector<Element>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

EnumerationBudget budget_of(const SuiteConfig& cfg, bool sampled) {
    EnumerationBudget b;
    b.max_candidates = sampled ? cfg.sample_count : cfg.budget;
    b.seed = cfg.seed;
    return b;
}

using PerFunction = std::function<bool(const FunctionTable&, std::string&)>;

// Streams every table of each space through `check`; stops at the first
// failure and records the offending table verbatim.
void sweep(const std::vector<Space>& spaces, const SuiteConfig& cfg,
           const PerFunction& check, CheckResult& res) {
    for (const auto& sp : spaces) {
        FunctionSpace stream(sp.arity, sp.X, sp.Y, budget_of(cfg, sp.sampled));
        FunctionTable f = stream.make_blank();
        while (stream.next(f)) {
            ++res.checked;
            std::string why;
            if (!check(f, why)) {
                res.pass = false;
                res.detail = sp.name + " f=" + show_values(f.values) +
                             (why.empty() ? "" : " (" + why + ")");
                return;
            }
        }
    }
}

// Quasi-polynomial that is not quasi-idempotent: the threshold map
// composed with med(x1 ^ x2, m, x1 v x2) on a 3-chain.
FunctionTable threshold_median_composition() {
    Lattice c3 = Lattice::chain(3);
    UnaryMap step{c3, c3, {0, 2, 2}};
    PolynomialForm p{2, c3, {0, 1, 1, 2}, std::nullopt, true};  // med(x1^x2, 1, x1vx2)
    return compose(p, step);
}

}  // namespace

CheckResult polynomial_equivalences(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 1;
    res.name = "polynomial <=> median-decomposable <=> order-preserving + homogeneous";
    sweep(polynomial_spaces(cfg, false), cfg,
          [](const FunctionTable& f, std::string& why) {
              bool poly = is_polynomial(f).ok;
              bool med = is_median_decomposable(f).ok;
              PropertyReport rep = polynomial_property_report(f);
              bool hom = rep.order_preserving.ok && rep.meet_homogeneous.ok &&
                         rep.join_homogeneous.ok;
              if (poly == med && med == hom) return true;
              why = "polynomial=" + std::to_string(poly) +
                    " median=" + std::to_string(med) +
                    " homogeneous=" + std::to_string(hom);
              return false;
          },
          res);
    return res;
}

CheckResult chain_comonotone(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 2;
    res.name = "chains: polynomial <=> idempotent + comonotonic min/maxitive";
    sweep(polynomial_spaces(cfg, true), cfg,
          [](const FunctionTable& f, std::string& why) {
              bool poly = is_polynomial(f).ok;
              PropertyReport rep = polynomial_property_report(f);
              bool chr = rep.idempotent.ok && rep.comonotonic_minitive.ok &&
                         rep.comonotonic_maxitive.ok;
              if (poly == chr) return true;
              why = "polynomial=" + std::to_string(poly) +
                    " comonotone-characterization=" + std::to_string(chr);
              return false;
          },
          res);
    return res;
}

CheckResult quasi_vs_oracle(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 3;
    res.name = "quasi-median recognizer <=> brute-force composition membership";
    for (const auto& sp : quasi_spaces(cfg)) {
        QuasiMembershipOracle oracle(sp.arity, sp.X, sp.Y, budget_of(cfg, false));
        FunctionSpace stream(sp.arity, sp.X, sp.Y, budget_of(cfg, false));
        FunctionTable f = stream.make_blank();
        while (stream.next(f)) {
            ++res.checked;
            bool rec = is_quasi_polynomial(f, false).ok;
            bool mem = oracle.contains(f);
            if (rec != mem) {
                res.pass = false;
                res.detail = sp.name + " f=" + show_values(f.values) +
                             " recognizer=" + std::to_string(rec) +
                             " oracle=" + std::to_string(mem);
                return res;
            }
        }
    }
    return res;
}

CheckResult factorization_sets(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 4;
    res.name = "p o phi = f <=> <p>_f = p_f and <phi>_p = delta_f";
    if (cfg.max_elems < 3 || cfg.max_arity < 2) return res;
    Lattice c3 = Lattice::chain(3);
    EnumerationBudget budget = budget_of(cfg, false);
    auto polys = enumerate_polynomials(2, c3, budget);
    auto maps = enumerate_bracket_maps(c3, c3, budget);
    std::vector<FunctionTable> ptabs;
    ptabs.reserve(polys.size());
    for (const auto& p : polys) ptabs.push_back(p.to_table());

    QuasiMembershipOracle oracle(2, c3, c3, budget);
    for (const auto& values : oracle.members()) {
        FunctionTable f(2, c3, c3);
        f.values = values;
        FunctionTable pf = goodstein_extend(hat(f, HatMode::dnf), c3, 2).to_table();
        UnaryMap delta = diagonal(f);
        Element f0 = f(0), f1 = f(f.count() - 1);
        for (size_t pi = 0; pi < polys.size(); ++pi) {
            Element p0 = ptabs[pi](0), p1 = ptabs[pi](ptabs[pi].count() - 1);
            for (const auto& phi : maps) {
                ++res.checked;
                bool composes = compose(polys[pi], phi).values == f.values;
                // <p>_f as a table over Y^n
                bool bracket_p = true;
                for (long long i = 0; i < pf.count() && bracket_p; ++i)
                    bracket_p = c3.med(f0, ptabs[pi](i), f1) == pf(i);
                bool bracket_phi = true;
                for (Element c = 0; c < c3.size() && bracket_phi; ++c)
                    bracket_phi = c3.med(p0, phi(c), p1) == delta(c);
                if (composes != (bracket_p && bracket_phi)) {
                    res.pass = false;
                    res.detail = "f=" + show_values(f.values) +
                                 " p=" + show_values(polys[pi].alpha) +
                                 " phi=" + show_values(phi.table);
                    return res;
                }
            }
        }
    }
    return res;
}

CheckResult sugeno_factorizations(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 5;
    res.name = "every quasi-polynomial factors through a Sugeno integral";
    if (cfg.max_elems < 3 || cfg.max_arity < 2) return res;
    Lattice c3 = Lattice::chain(3);
    QuasiMembershipOracle oracle(2, c3, c3, budget_of(cfg, false));
    for (const auto& values : oracle.members()) {
        ++res.checked;
        FunctionTable f(2, c3, c3);
        f.values = values;
        Factorization fac = quasi_sugeno_factorization(f);
        if (!fac.verified || !is_sugeno(fac.p.to_table())) {
            res.pass = false;
            res.detail = "f=" + show_values(f.values) +
                         " q=" + show_values(fac.p.alpha);
            return res;
        }
    }
    return res;
}

CheckResult quasi_homogeneity(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 6;
    res.name = "quasi-homogeneity/horizontal-decomposition flags <=> quasi-polynomial";
    sweep(quasi_spaces(cfg), cfg,
          [](const FunctionTable& f, std::string& why) {
              if (!table_order_preserving(f).ok) return true;
              if (!is_homomorphism(diagonal(f))) return true;
              QuasiPropertyReport rep = quasi_property_report(f, false);
              bool qp = is_quasi_polynomial(f, false).ok;
              bool ii = rep.quasi_meet_homogeneous.ok && rep.quasi_join_homogeneous.ok;
              bool iii = rep.quasi_meet_homogeneous.ok &&
                         rep.horizontally_join_decomposable.ok;
              bool iv = rep.horizontally_meet_decomposable.ok &&
                        rep.quasi_join_homogeneous.ok;
              if (ii == qp && iii == qp && iv == qp) return true;
              why = "qp=" + std::to_string(qp) + " (ii)=" + std::to_string(ii) +
                    " (iii)=" + std::to_string(iii) + " (iv)=" + std::to_string(iv);
              return false;
          },
          res);
    return res;
}

CheckResult quasi_comonotone(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 7;
    res.name = "chain codomains: quasi-comonotonic min+maxitive <=> quasi-polynomial";
    sweep(quasi_spaces(cfg), cfg,
          [](const FunctionTable& f, std::string& why) {
              if (!f.codomain.is_chain()) return true;
              if (!table_order_preserving(f).ok) return true;
              if (!is_homomorphism(diagonal(f))) return true;
              QuasiPropertyReport rep = quasi_property_report(f);
              bool qc = rep.quasi_comonotonic_minitive.ok &&
                        rep.quasi_comonotonic_maxitive.ok;
              bool qp = is_quasi_polynomial(f, false).ok;
              if (qc == qp) return true;
              why = "qp=" + std::to_string(qp) + " comonotone=" + std::to_string(qc);
              return false;
          },
          res);
    return res;
}

CheckResult hat_fixtures(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 8;
    res.name = "hat: binary-sum fixture, dnf=cnf on quasi-polynomials, monotone gap witness";
    // binary addition mod 2 collapses to conjunction (dnf) / disjunction (cnf)
    Lattice c2 = Lattice::chain(2);
    FunctionTable bsum(2, c2, c2);
    bsum.values = {0, 1, 1, 0};
    if (hat(bsum, HatMode::dnf) != std::vector<Element>{0, 0, 0, 1} ||
        hat(bsum, HatMode::cnf) != std::vector<Element>{0, 1, 1, 1}) {
        res.pass = false;
        res.detail = "binary-sum hat fixture mismatch";
        return res;
    }
    ++res.checked;

    for (const auto& sp : quasi_spaces(cfg)) {
        QuasiMembershipOracle oracle(sp.arity, sp.X, sp.Y, budget_of(cfg, false));
        for (const auto& values : oracle.members()) {
            ++res.checked;
            FunctionTable f(sp.arity, sp.X, sp.Y);
            f.values = values;
            if (hat(f, HatMode::dnf) != hat(f, HatMode::cnf)) {
                res.pass = false;
                res.detail = sp.name + " f=" + show_values(f.values) +
                             " hat dnf != cnf";
                return res;
            }
        }
    }

    // the converse gap: order-preserving functions with agreeing hats that
    // are not quasi-polynomial. Frozen regression fixture first, then the
    // search that rediscovers one.
    if (cfg.max_elems >= 3 && cfg.max_arity >= 2) {
        Lattice c3 = Lattice::chain(3);
        FunctionTable fix(2, c3, c3);
        fix.values = {0, 0, 0, 0, 1, 1, 0, 2, 2};
        bool fixture_ok = table_order_preserving(fix).ok &&
                          hat(fix, HatMode::dnf) == hat(fix, HatMode::cnf) &&
                          !is_quasi_polynomial(fix, false).ok;
        FunctionSpace stream(2, c3, c3, budget_of(cfg, false));
        FunctionTable f = stream.make_blank();
        bool found = false;
        while (!found && stream.next(f))
            found = table_order_preserving(f).ok &&
                    hat(f, HatMode::dnf) == hat(f, HatMode::cnf) &&
                    !is_quasi_polynomial(f, false).ok;
        ++res.checked;
        if (!fixture_ok || !found) {
            res.pass = false;
            res.detail = fixture_ok ? "search found no order-preserving non-quasi-polynomial"
                                    : "frozen fixture no longer behaves as pinned";
            return res;
        }
    }
    return res;
}

CheckResult threshold_counterexample(const SuiteConfig& cfg) {
    (void)cfg;
    CheckResult res;
    res.criterion = 9;
    res.name = "quasi-idempotency necessity: threshold/median composition on chain(3)";
    Lattice c3 = Lattice::chain(3);
    FunctionTable f = threshold_median_composition();
    res.checked = 1;
    bool qp = is_quasi_polynomial(f, false).ok;
    bool qi = is_quasi_idempotent(f);
    TransformedCheck tc = is_transformed_polynomial(f);
    // f(top, 0) is the middle element, outside the diagonal's range
    long long top_bottom = encode_tuple(std::vector<Element>{c3.top(), 0}, 3);
    bool witness = f(top_bottom) == 1;
    if (qp && !qi && !tc.ok && !tc.oracle_decided && witness) return res;
    res.pass = false;
    res.detail = "qp=" + std::to_string(qp) + " qi=" + std::to_string(qi) +
                 " transformed=" + std::to_string(tc.ok) +
                 " f(2,0)=" + std::to_string(f(top_bottom));
    return res;
}

CheckResult transformed_vs_oracle(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 10;
    res.name = "transformed recognizer <=> psi-o-p membership; factor/promotion identities";
    std::vector<Space> spaces;
    if (cfg.max_elems >= 3 && cfg.max_arity >= 2) spaces.push_back(chain_space(2, 3, 3));
    if (cfg.max_elems >= 2 && cfg.max_arity >= 3) spaces.push_back(chain_space(3, 2, 2));
    for (const auto& sp : spaces) {
        EnumerationBudget budget = budget_of(cfg, false);
        TransformedMembershipOracle oracle(sp.arity, sp.X, sp.Y, budget);

        FunctionSpace stream(sp.arity, sp.X, sp.Y, budget);
        FunctionTable f = stream.make_blank();
        while (stream.next(f)) {
            if (!is_homomorphism(diagonal(f))) continue;
            ++res.checked;
            TransformedCheck tc = is_transformed_polynomial(f, budget);
            if (tc.ok != oracle.contains(f)) {
                res.pass = false;
                res.detail = sp.name + " f=" + show_values(f.values) +
                             " recognizer=" + std::to_string(tc.ok) +
                             " oracle=" + std::to_string(!tc.ok);
                return res;
            }
        }

        // every constructed psi o p instance satisfies f = delta_f o p and
        // the promotion criterion tracks is_polynomial exactly
        auto polys = enumerate_polynomials(sp.arity, sp.X, budget);
        std::vector<Element> psi(sp.X.size(), 0);
        do {
            UnaryMap psim{sp.X, sp.Y, psi};
            for (const auto& p : polys) {
                ++res.checked;
                FunctionTable ptab = p.to_table();
                FunctionTable g = compose(psim, ptab);
                if (compose(diagonal(g), ptab).values != g.values) {
                    res.pass = false;
                    res.detail = sp.name + " recomposition through the diagonal fails for psi=" +
                                 show_values(psi) + " p=" + show_values(p.alpha);
                    return res;
                }
                PromotionReport promo = promote_to_polynomial(g);
                if (promo.criterion != promo.polynomial) {
                    res.pass = false;
                    res.detail = sp.name + " promotion criterion mismatch for f=" +
                                 show_values(g.values);
                    return res;
                }
            }
        } while (next_tuple(psi, sp.Y.size()));
    }
    return res;
}

CheckResult enumeration_counts(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 11;
    res.name = "enumeration counts: 6 binary polynomials on chain(2), 20 on chain(3)";
    struct Expect {
        int chain;
        long long count;
    };
    for (Expect e : {Expect{2, 6}, Expect{3, 20}}) {
        if (cfg.max_elems < e.chain || cfg.max_arity < 2) continue;
        Lattice Y = Lattice::chain(e.chain);
        long long enumerated =
            static_cast<long long>(enumerate_polynomials(2, Y).size());
        // independent referee: filter all maps on 0/1-pairs for monotonicity
        long long direct = 0;
        std::vector<Element> g(4, 0);
        do {
            if (!monotonicity_violation(g, Y, 2)) ++direct;
        } while (next_tuple(g, Y.size()));
        ++res.checked;
        if (enumerated != e.count || direct != e.count) {
            res.pass = false;
            res.detail = "chain(" + std::to_string(e.chain) + "): enumerated " +
                         std::to_string(enumerated) + ", direct " +
                         std::to_string(direct) + ", frozen " +
                         std::to_string(e.count);
            return res;
        }
    }
    return res;
}

CheckResult bracket_identities(const SuiteConfig& cfg) {
    CheckResult res;
    res.criterion = 12;
    res.name = "bracket/diagonal/shift identities hold for every (p, phi)";
    for (const auto& sp : quasi_spaces(cfg)) {
        EnumerationBudget budget = budget_of(cfg, false);
        auto polys = enumerate_polynomials(sp.arity, sp.Y, budget);
        auto maps = enumerate_bracket_maps(sp.X, sp.Y, budget);
        const Lattice& Y = sp.Y;
        for (const auto& p : polys) {
            FunctionTable pt = p.to_table();
            Element p0 = pt(0), p1 = pt(pt.count() - 1);
            UnaryMap dp = diagonal(pt);
            auto in_range = range_of(pt.values);

            // identities of p alone: monotone table, diagonal = bracket map,
            // bracket absorption, shift rules
            std::string why;
            bool ok = table_order_preserving(pt).ok;
            for (Element c = 0; c < Y.size() && ok; ++c)
                ok = dp(c) == Y.med(p0, c, p1);
            for (Element c : in_range)
                ok = ok && dp(c) == c;
            TupleCursor cur(sp.arity, Y);
            std::vector<Element> y(sp.arity);
            while (ok) {
                y = bracket(Y, cur.tuple, p0, p1);
                ok = pt.at(y) == pt(cur.index);
                for (Element c = 0; c < Y.size() && ok; ++c) {
                    Element cb = Y.med(p0, c, p1);
                    y = join_const(Y, cur.tuple, c);
                    ok = pt.at(y) == Y.join(pt(cur.index), cb);
                    y = meet_const(Y, cur.tuple, c);
                    ok = ok && pt.at(y) == Y.meet(pt(cur.index), cb);
                }
                if (!ok || !cur.advance()) break;
            }
            if (!ok) {
                res.pass = false;
                res.detail = sp.name + " p=" + show_values(p.alpha) +
                             " violates a standalone polynomial identity";
                return res;
            }

            for (const auto& phi : maps) {
                ++res.checked;
                FunctionTable f = compose(p, phi);
                Element f0 = f(0), f1 = f(f.count() - 1);
                UnaryMap df = diagonal(f);
                Element phi0 = phi(0), phi1 = phi(phi.domain.size() - 1);

                // delta_f = <phi>_p and f = p o delta_f
                bool good = true;
                for (Element c = 0; c < phi.domain.size() && good; ++c)
                    good = df(c) == Y.med(p0, phi(c), p1);
                good = good && compose(p, df).values == f.values;
                if (p0 == Y.bottom() && p1 == Y.top())
                    good = good && phi.table == df.table;  // p Sugeno => phi = delta_f

                // <p(x)>_f = p(<x>_phi) over Y^n, and f = <f>_f
                TupleCursor yc(sp.arity, Y);
                while (good) {
                    y = bracket(Y, yc.tuple, Y.meet(phi0, phi1), Y.join(phi0, phi1));
                    good = Y.med(f0, pt(yc.index), f1) == pt.at(y);
                    if (!good || !yc.advance()) break;
                }
                for (long long i = 0; i < f.count() && good; ++i)
                    good = Y.med(f0, f(i), f1) == f(i);

                if (!good) {
                    res.pass = false;
                    res.detail = sp.name + " p=" + show_values(p.alpha) +
                                 " phi=" + show_values(phi.table) +
                                 " violates a composition identity";
                    return res;
                }
            }
        }
    }
    return res;
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    bool core = suite == "core" || suite == "all";
    bool chains = suite == "chains" || suite == "all";
    bool transformed = suite == "transformed" || suite == "all";
    if (!core && !chains && !transformed)
        throw std::invalid_argument("unknown suite \"" + suite + "\"");
    if (core) {
        out.push_back(polynomial_equivalences(cfg));
        out.push_back(quasi_vs_oracle(cfg));
        out.push_back(factorization_sets(cfg));
        out.push_back(sugeno_factorizations(cfg));
        out.push_back(quasi_homogeneity(cfg));
        out.push_back(hat_fixtures(cfg));
        out.push_back(enumeration_counts(cfg));
        out.push_back(bracket_identities(cfg));
    }
    if (chains) {
        out.push_back(chain_comonotone(cfg));
        out.push_back(quasi_comonotone(cfg));
    }
    if (transformed) {
        out.push_back(threshold_counterexample(cfg));
        out.push_back(transformed_vs_oracle(cfg));
    }
    return out;
}

}  // namespace qlat::suites

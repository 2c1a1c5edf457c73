#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qlat/io.hpp"
#include "qlat/suites.hpp"

using nlohmann::json;
using namespace qlat;

namespace {

long long default_budget() {
    if (const char* env = std::getenv("QLAT_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("QLAT_BUDGET: not a positive integer");
    }
    return EnumerationBudget{}.max_candidates;
}

json tuple_json(long long index, int base, int arity) {
    std::vector<Element> x(arity);
    decode_tuple(index, base, x);
    return json(x);
}

json check_json(const Check& c, const std::function<json(const std::vector<long long>&)>& decode) {
    json j = {{"ok", c.ok}};
    j["witness"] = c.ok ? json(nullptr) : decode(c.witness);
    return j;
}

json check_json(const Check& c) {
    return check_json(c, [](const std::vector<long long>& w) { return json(w); });
}

// witness {a index, b index}: two comparable tuples with values out of order
json pair_decoder(const FunctionTable& f, const std::vector<long long>& w) {
    return {{"x", tuple_json(w[0], f.domain.size(), f.arity)},
            {"y", tuple_json(w[1], f.domain.size(), f.arity)}};
}

// witness {x index, c}
json point_const_decoder(const FunctionTable& f, const std::vector<long long>& w) {
    return {{"x", tuple_json(w[0], f.domain.size(), f.arity)}, {"c", w[1]}};
}

json quasi_witness(const FunctionTable& f, const QuasiCheck& qc) {
    if (qc.ok) return nullptr;
    return {{"x", tuple_json(qc.x_index, f.domain.size(), f.arity)},
            {"coord", qc.coord}};
}

json properties_json(const FunctionTable& f, const PropertyReport& rep) {
    auto pairs = [&f](const std::vector<long long>& w) { return pair_decoder(f, w); };
    auto xc = [&f](const std::vector<long long>& w) { return point_const_decoder(f, w); };
    json j;
    j["range"] = rep.range;
    j["range_hull"] = rep.range_hull;
    j["order_preserving"] = check_json(rep.order_preserving, pairs);
    j["idempotent"] = check_json(rep.idempotent);
    j["meet_homogeneous"] = check_json(rep.meet_homogeneous, xc);
    j["join_homogeneous"] = check_json(rep.join_homogeneous, xc);
    j["comonotone_applicable"] = rep.comonotone_applicable;
    if (rep.comonotone_applicable) {
        j["comonotonic_minitive"] = check_json(rep.comonotonic_minitive, pairs);
        j["comonotonic_maxitive"] = check_json(rep.comonotonic_maxitive, pairs);
    }
    return j;
}

json quasi_properties_json(const FunctionTable& f, const QuasiPropertyReport& rep) {
    auto pairs = [&f](const std::vector<long long>& w) { return pair_decoder(f, w); };
    auto xc = [&f](const std::vector<long long>& w) { return point_const_decoder(f, w); };
    json j;
    j["order_preserving"] = check_json(rep.order_preserving, pairs);
    j["diagonal_homomorphism"] = check_json(rep.diagonal_homomorphism);
    j["quasi_meet_homogeneous"] = check_json(rep.quasi_meet_homogeneous, xc);
    j["quasi_join_homogeneous"] = check_json(rep.quasi_join_homogeneous, xc);
    j["horizontally_meet_decomposable"] =
        check_json(rep.horizontally_meet_decomposable, xc);
    j["horizontally_join_decomposable"] =
        check_json(rep.horizontally_join_decomposable, xc);
    j["comonotone_applicable"] = rep.comonotone_applicable;
    if (rep.comonotone_applicable) {
        j["quasi_comonotonic_minitive"] =
            check_json(rep.quasi_comonotonic_minitive, pairs);
        j["quasi_comonotonic_maxitive"] =
            check_json(rep.quasi_comonotonic_maxitive, pairs);
    }
    return j;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError(out_path + ": cannot open for writing");
    out << report.dump(2) << "\n";
}

int cmd_classify(const std::string& path) {
    FunctionTable f = function_from_file(path);
    json report;
    report["command"] = "classify";
    report["input"] = function_to_json(f);

    UnaryMap delta = diagonal(f);
    UnaryReport dr = unary_predicates(delta);
    report["diagonal"] = {{"table", delta.table},
                          {"order_preserving", dr.order_preserving},
                          {"homomorphism", dr.homomorphism},
                          {"range", dr.range},
                          {"range_is_convex", dr.range_is_convex},
                          {"bracket_condition", dr.bracket_condition}};
    report["hat_dnf"] = hat(f, HatMode::dnf);
    report["hat_cnf"] = hat(f, HatMode::cnf);

    if (f.endogenous()) {
        report["polynomial"] = check_json(is_polynomial(f));
        Check med = is_median_decomposable(f);
        report["median_decomposable"] =
            check_json(med, [&f](const std::vector<long long>& w) {
                return json{{"x", tuple_json(w[0], f.domain.size(), f.arity)},
                            {"coord", w[1]}};
            });
        report["sugeno"] = is_sugeno(f);
        report["properties"] = properties_json(f, polynomial_property_report(f));
    }

    QuasiCheck qc = is_quasi_polynomial(f, false);
    report["quasi_polynomial"] = {{"ok", qc.ok}, {"witness", quasi_witness(f, qc)}};
    report["quasi_idempotent"] = is_quasi_idempotent(f);
    report["quasi_properties"] = quasi_properties_json(f, quasi_property_report(f));

    TransformedCheck tc = is_transformed_polynomial(f);
    report["transformed_polynomial"] = {
        {"ok", tc.ok},
        {"oracle_decided", tc.oracle_decided},
        {"diagonal_homomorphism", tc.diagonal_homomorphism},
        {"quasi_idempotent", tc.quasi_idempotent},
        {"quasi_polynomial", tc.quasi_polynomial}};

    emit(report, "");
    return 0;
}

int cmd_factorize(const std::string& path, const std::string& mode,
                  const std::string& out_path, long long budget_cap) {
    FunctionTable f = function_from_file(path);
    json report;
    report["command"] = "factorize";
    report["mode"] = mode;
    report["input"] = function_to_json(f);

    QuasiCheck qc = is_quasi_polynomial(f, false);
    if (mode == "all") {
        EnumerationBudget budget;
        budget.max_candidates = budget_cap;
        auto all = enumerate_factorizations(f, budget);
        report["count"] = all.size();
        json list = json::array();
        for (const auto& fac : all) list.push_back(factorization_to_json(fac));
        report["factorizations"] = std::move(list);
        if (all.empty()) {
            report["witness"] = quasi_witness(f, qc);
            emit(report, out_path);
            return 1;
        }
        emit(report, out_path);
        return 0;
    }

    if (mode == "canonical" || mode == "sugeno") {
        if (!qc.ok) {
            report["witness"] = quasi_witness(f, qc);
            emit(report, out_path);
            return 1;
        }
        Factorization fac = mode == "sugeno" ? quasi_sugeno_factorization(f)
                                             : canonical_factorization(f);
        report["factorization"] = factorization_to_json(fac);
        emit(report, out_path);
        return 0;
    }

    if (mode == "transformed") {
        TransformedCheck tc = is_transformed_polynomial(f);
        if (!tc.ok) {
            report["witness"] = {
                {"diagonal_homomorphism", tc.diagonal_homomorphism},
                {"quasi_idempotent", tc.quasi_idempotent},
                {"quasi_polynomial", tc.quasi_polynomial},
                {"quasi_median", quasi_witness(f, qc)}};
            emit(report, out_path);
            return 1;
        }
        report["factorization"] = factorization_to_json(transformed_factorization(f));
        emit(report, out_path);
        return 0;
    }

    throw ParseError("mode: expected canonical, sugeno, transformed, or all");
}

int cmd_verify(const std::string& suite, const suites::SuiteConfig& cfg) {
    namespace chrono = std::chrono;
    auto t0 = chrono::steady_clock::now();
    std::vector<suites::CheckResult> results = suites::run_suite(suite, cfg);
    auto elapsed =
        chrono::duration_cast<chrono::milliseconds>(chrono::steady_clock::now() - t0);

    json report;
    report["command"] = "verify";
    report["suite"] = suite;
    report["config"] = {{"seed", cfg.seed},
                        {"sample_count", cfg.sample_count},
                        {"max_elems", cfg.max_elems},
                        {"max_arity", cfg.max_arity}};
    json checks = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
        checks.push_back({{"criterion", r.criterion},
                          {"name", r.name},
                          {"pass", r.pass},
                          {"checked", r.checked},
                          {"detail", r.detail}});
        all_pass = all_pass && r.pass;
    }
    report["checks"] = std::move(checks);
    report["pass"] = all_pass;
    emit(report, "");
    std::cerr << "verify " << suite << ": " << elapsed.count() << " ms\n";
    return all_pass ? 0 : 1;
}

int cmd_enumerate(int arity, const std::string& domain_spec,
                  const std::string& codomain_spec, const std::string& cls,
                  bool count_only, long long budget_cap) {
    Lattice X = make_lattice(lattice_spec_from_string(domain_spec));
    Lattice Y = make_lattice(lattice_spec_from_string(codomain_spec));
    EnumerationBudget budget;
    budget.max_candidates = budget_cap;

    json report;
    report["command"] = "enumerate";
    report["class"] = cls;
    report["arity"] = arity;
    report["domain"] = lattice_spec_to_json(X.spec());
    report["codomain"] = lattice_spec_to_json(Y.spec());

    std::vector<FunctionTable> members;
    if (cls == "polynomial" || cls == "sugeno") {
        if (!(X == Y))
            throw ParseError("class " + cls + ": domain and codomain must agree");
        for (const auto& p : enumerate_polynomials(arity, Y, budget)) {
            if (cls == "sugeno" &&
                (p.alpha.front() != Y.bottom() || p.alpha.back() != Y.top()))
                continue;
            members.push_back(p.to_table());
        }
    } else if (cls == "quasi") {
        QuasiMembershipOracle oracle(arity, X, Y, budget);
        for (const auto& values : oracle.members()) {
            FunctionTable f(arity, X, Y);
            f.values = values;
            members.push_back(std::move(f));
        }
    } else if (cls == "transformed") {
        TransformedMembershipOracle oracle(arity, X, Y, budget);
        for (const auto& values : oracle.members()) {
            FunctionTable f(arity, X, Y);
            f.values = values;
            members.push_back(std::move(f));
        }
    } else {
        throw ParseError("class: expected polynomial, sugeno, quasi, or transformed");
    }

    report["count"] = members.size();
    if (!count_only) {
        json list = json::array();
        for (const auto& f : members) list.push_back(function_to_json(f));
        report["members"] = std::move(list);
    }
    emit(report, "");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite distributive lattice polynomial toolkit"};
    app.require_subcommand(1);

    std::string fn_path, mode = "canonical", out_path, suite = "all";
    std::string domain_spec, codomain_spec, cls;
    int arity = 2;
    bool count_only = false;
    suites::SuiteConfig cfg;

    CLI::App* classify = app.add_subcommand("classify", "report every predicate for a function table");
    classify->add_option("-f,--function", fn_path, "function file (JSON)")->required();

    CLI::App* factorize = app.add_subcommand("factorize", "factor a function through a unary map");
    factorize->add_option("-f,--function", fn_path, "function file (JSON)")->required();
    factorize->add_option("--mode", mode, "canonical|sugeno|transformed|all");
    factorize->add_option("-o,--out", out_path, "write the report here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a characterization-equivalence suite");
    verify->add_option("--suite", suite, "core|chains|transformed|all");
    verify->add_option("--max-elems", cfg.max_elems, "chain-size cap for test spaces");
    verify->add_option("--max-arity", cfg.max_arity, "arity cap for test spaces");
    verify->add_option("--seed", cfg.seed, "seed for sampled spaces");
    verify->add_option("--samples", cfg.sample_count, "tables per sampled space");

    CLI::App* enumerate = app.add_subcommand("enumerate", "list a function class exhaustively");
    enumerate->add_option("--arity", arity, "number of arguments")->required();
    enumerate->add_option("--domain", domain_spec, "chain:K, bool:K, or inline JSON")->required();
    enumerate->add_option("--codomain", codomain_spec, "chain:K, bool:K, or inline JSON")->required();
    enumerate->add_option("--class", cls, "polynomial|sugeno|quasi|transformed")->required();
    enumerate->add_flag("--count-only", count_only, "emit only the count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        long long cap = default_budget();
        cfg.budget = cap;
        if (classify->parsed()) return cmd_classify(fn_path);
        if (factorize->parsed()) return cmd_factorize(fn_path, mode, out_path, cap);
        if (verify->parsed()) return cmd_verify(suite, cfg);
        return cmd_enumerate(arity, domain_spec, codomain_spec, cls, count_only, cap);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LatticeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

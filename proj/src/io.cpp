#include "qlat/io.hpp"

#include <fstream>

namespace qlat {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(key, "missing or non-integer field");
    return j[key].get<int>();
}

std::vector<Element> require_values(const json& j, const char* key,
                                    size_t expect, int limit) {
    if (!j.contains(key) || !j[key].is_array())
        fail(key, "missing or non-array field");
    const json& arr = j[key];
    if (expect != 0 && arr.size() != expect)
        fail(key, "expected " + std::to_string(expect) + " entries, got " +
                      std::to_string(arr.size()));
    std::vector<Element> out;
    out.reserve(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number_integer())
            fail(key, "entry " + std::to_string(i) + " is not an integer");
        int v = arr[i].get<int>();
        if (v < 0 || v >= limit)
            fail(key, "entry " + std::to_string(i) + " = " + std::to_string(v) +
                          " is out of range [0, " + std::to_string(limit) + ")");
        out.push_back(v);
    }
    return out;
}

}  // namespace

json lattice_spec_to_json(const LatticeSpec& spec) {
    switch (spec.kind) {
        case LatticeSpec::Kind::chain:
            return {{"kind", "chain"}, {"size", spec.param}};
        case LatticeSpec::Kind::boolean_algebra:
            return {{"kind", "boolean"}, {"atoms", spec.param}};
        case LatticeSpec::Kind::product: {
            json factors = json::array();
            for (const auto& f : spec.factors)
                factors.push_back(lattice_spec_to_json(f));
            return {{"kind", "product"}, {"factors", factors}};
        }
        case LatticeSpec::Kind::explicit_order: {
            json j = {{"kind", "explicit"}, {"size", spec.param}, {"leq", spec.leq}};
            if (!spec.labels.empty()) j["labels"] = spec.labels;
            return j;
        }
    }
    fail("lattice", "unknown spec kind");
}

LatticeSpec lattice_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail("lattice", "expected an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    LatticeSpec spec;
    if (kind == "chain") {
        spec.kind = LatticeSpec::Kind::chain;
        spec.param = require_int(j, "size");
    } else if (kind == "boolean") {
        spec.kind = LatticeSpec::Kind::boolean_algebra;
        spec.param = require_int(j, "atoms");
    } else if (kind == "product") {
        spec.kind = LatticeSpec::Kind::product;
        if (!j.contains("factors") || !j["factors"].is_array())
            fail("factors", "missing or non-array field");
        for (const auto& f : j["factors"])
            spec.factors.push_back(lattice_spec_from_json(f));
    } else if (kind == "explicit") {
        spec.kind = LatticeSpec::Kind::explicit_order;
        spec.param = require_int(j, "size");
        if (!j.contains("leq") || !j["leq"].is_array())
            fail("leq", "missing or non-array field");
        for (const auto& row : j["leq"]) {
            if (!row.is_array()) fail("leq", "rows must be arrays");
            spec.leq.emplace_back();
            for (const auto& v : row) spec.leq.back().push_back(v.get<int>());
        }
        if (static_cast<int>(spec.leq.size()) != spec.param)
            fail("leq", "row count does not match \"size\"");
        if (j.contains("labels"))
            spec.labels = j["labels"].get<std::vector<std::string>>();
    } else {
        fail("kind", "unknown lattice kind \"" + kind + "\"");
    }
    return spec;
}

LatticeSpec lattice_spec_from_string(const std::string& text) {
    if (text.rfind("chain:", 0) == 0)
        return {LatticeSpec::Kind::chain, std::stoi(text.substr(6)), {}, {}, {}};
    if (text.rfind("bool:", 0) == 0)
        return {LatticeSpec::Kind::boolean_algebra, std::stoi(text.substr(5)),
                {}, {}, {}};
    json j = json::parse(text, nullptr, true);
    return lattice_spec_from_json(j);
}

json function_to_json(const FunctionTable& f) {
    return {{"arity", f.arity},
            {"domain", lattice_spec_to_json(f.domain.spec())},
            {"codomain", lattice_spec_to_json(f.codomain.spec())},
            {"values", f.values}};
}

FunctionTable function_from_json(const json& j) {
    if (!j.is_object()) fail("function", "expected an object");
    int arity = require_int(j, "arity");
    if (arity < 1 || arity > 16) fail("arity", "must be in 1..16");
    if (!j.contains("domain") || !j.contains("codomain"))
        fail("function", "missing \"domain\" or \"codomain\"");
    Lattice dom = make_lattice(lattice_spec_from_json(j["domain"]));
    Lattice cod = make_lattice(lattice_spec_from_json(j["codomain"]));
    FunctionTable f(arity, std::move(dom), std::move(cod));
    f.values = require_values(j, "values", f.values.size(), f.codomain.size());
    return f;
}

FunctionTable function_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path, e.what());
    }
    return function_from_json(j);
}

json form_to_json(const PolynomialForm& p) {
    json j = {{"arity", p.arity},
              {"lattice", lattice_spec_to_json(p.lattice.spec())},
              {"alpha", p.alpha}};
    if (p.beta) j["beta"] = *p.beta;
    return j;
}

PolynomialForm form_from_json(const json& j) {
    if (!j.is_object()) fail("form", "expected an object");
    int arity = require_int(j, "arity");
    if (arity < 1 || arity > 16) fail("arity", "must be in 1..16");
    if (!j.contains("lattice")) fail("form", "missing \"lattice\"");
    Lattice L = make_lattice(lattice_spec_from_json(j["lattice"]));
    PolynomialForm p;
    p.arity = arity;
    p.alpha = require_values(j, "alpha", 1u << arity, L.size());
    if (j.contains("beta"))
        p.beta = require_values(j, "beta", 1u << arity, L.size());
    p.canonical = !monotonicity_violation(p.alpha, L, arity).has_value();
    p.lattice = std::move(L);
    return p;
}

json factorization_to_json(const Factorization& fac) {
    const char* kind = fac.kind == FactorKind::generic    ? "generic"
                       : fac.kind == FactorKind::sugeno   ? "sugeno"
                                                          : "transformed";
    return {{"kind", kind},
            {"p", form_to_json(fac.p)},
            {"phi", {{"table", fac.phi.table}}},
            {"verified", fac.verified}};
}

Factorization factorization_from_json(const json& j, const FunctionTable& f) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("p") ||
        !j.contains("phi"))
        fail("factorization", "expected kind, p, and phi");
    std::string kind = j["kind"].get<std::string>();
    Factorization fac;
    if (kind == "generic") fac.kind = FactorKind::generic;
    else if (kind == "sugeno") fac.kind = FactorKind::sugeno;
    else if (kind == "transformed") fac.kind = FactorKind::transformed;
    else fail("kind", "unknown factorization kind \"" + kind + "\"");
    fac.p = form_from_json(j["p"]);
    const Lattice& phi_cod = fac.kind == FactorKind::transformed
                                 ? f.codomain
                                 : fac.p.lattice;
    fac.phi = UnaryMap{f.domain, phi_cod, {}};
    fac.phi.table = require_values(j["phi"], "table", f.domain.size(),
                                   phi_cod.size());
    if (j.contains("verified")) fac.verified = j["verified"].get<bool>();
    return fac;
}

}  // namespace qlat

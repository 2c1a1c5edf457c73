#pragma once

#include <json.hpp>

#include "qlat/quasipoly.hpp"

namespace qlat {

/// Malformed or schema-violating input document.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json lattice_spec_to_json(const LatticeSpec& spec);
LatticeSpec lattice_spec_from_json(const nlohmann::json& j);

/// Accepts either inline JSON or the shorthands "chain:K" / "bool:K".
LatticeSpec lattice_spec_from_string(const std::string& text);

nlohmann::json function_to_json(const FunctionTable& f);
FunctionTable function_from_json(const nlohmann::json& j);
FunctionTable function_from_file(const std::string& path);

nlohmann::json form_to_json(const PolynomialForm& p);
PolynomialForm form_from_json(const nlohmann::json& j);

nlohmann::json factorization_to_json(const Factorization& fac);
/// The phi table alone does not pin its lattices; they are inferred from
/// the function the factorization belongs to.
Factorization factorization_from_json(const nlohmann::json& j,
                                      const FunctionTable& f);

}  // namespace qlat

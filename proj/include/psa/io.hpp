#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "psa/bracket.hpp"
#include "psa/errors.hpp"
#include "psa/ideals.hpp"
#include "psa/strata.hpp"
#include "psa/torus.hpp"

namespace psa {

using nlohmann::json;

/// Malformed input file. The message names the file and the JSON location.
class InputError : public Error {
public:
  using Error::Error;
};

// Problem files look like
//   {"variables": ["x1","x2","x3"], "ring": "polynomial",
//    "bracket": {"kind": "log_canonical", "pi": [["0","1","1"], ...]},
//    "torus": {"rank": 3, "weights": [[1,0,0], ...]},
//    "derivations": [["x1","0","0"], ...]}
// with "ring", "bracket", "torus" and "derivations" optional (defaults:
// polynomial, zero bracket, identity torus, Hamiltonians of the variables).

/// `source` only labels error messages.
ProblemSpec problem_from_json(const json& j, const std::string& source = "<json>");
json problem_to_json(const ProblemSpec& problem);
ProblemSpec load_problem(const std::string& path);

BracketSpec bracket_from_json(const json& j, const ContextPtr& ctx, const std::string& source = "<json>");
json bracket_to_json(const BracketSpec& spec);

TorusAction torus_from_json(const json& j, std::size_t arity, const std::string& source = "<json>");
json torus_to_json(const TorusAction& torus);

/// {"monomial_generators": ["x1","x2"], "polynomial_generators": ["x1*x3 - 2*x2"]},
/// optionally with "assume_prime": true and "requires_saturation": true.
IdealSpec ideal_from_json(const json& j, const ContextPtr& ctx, const std::string& source = "<json>");
json ideal_to_json(const IdealSpec& ideal);

/// A single ideal object, an array of them, or {"ideals": [...]}.
std::vector<IdealSpec> catalog_from_json(const json& j, const ContextPtr& ctx, const std::string& source = "<json>");
std::vector<IdealSpec> load_catalog(const std::string& path, const ContextPtr& ctx);

/// {"X": ["x2","x3"], "J": "<x2,x3>", "center": ["x1"], "primitive_template": "<x2, x3, x1 - a1>"},
/// plus "requires_saturation": true when the template has two or more parameters.
json stratum_to_json(const PrimitiveTemplate& tmpl);
PrimitiveTemplate stratum_from_json(const json& j, const ProblemSpec& problem);

json axiom_report_to_json(const AxiomReport& report);
AxiomReport axiom_report_from_json(const json& j, const ContextPtr& ctx);

json core_result_to_json(const CoreTestResult& result, const DerivationSet& derivs);

json read_json_file(const std::string& path);

} // namespace psa

#pragma once

#include <json.hpp>
#include <string>

#include "pws/estimates.hpp"
#include "pws/section.hpp"
#include "pws/solver.hpp"

namespace pws {

using json = nlohmann::json;

// group string for a given rank: "sl2r" or "sl2r^d"
std::string group_name(int rank);
int parse_group(const std::string& s);  // returns the rank

json rational_to_json(const Rational& c);
Rational rational_from_json(const json& j);

// univariate: coefficient list [c0, c1, ...]; multivariate: term list
// [[[e1..ed], "p/q"], ...]; rationals serialize as strings "p/q"
json poly_to_json(const EvenPoly& p);
EvenPoly poly_from_json(const json& j, int rank);

json ktype_to_json(const KType& k);  // integer (rank 1) or integer array
KType ktype_from_json(const json& j, int rank);

json operator_to_json(const Level3Operator& p);
Level3Operator operator_from_json(const json& j);

// rhs files carry only h-coordinates: { "h": [poly, ...] }
json rhs_to_json(const std::vector<EvenPoly>& h);
std::vector<EvenPoly> rhs_from_json(const json& j, int rank);

json section_to_json(const Level2Section& s);
Level2Section section_from_json(const json& j);

json solve_report_to_json(const SolveReport& rep);

// stable top-level report wrapper {command, inputs, result, diagnostics}
json make_report(const std::string& command, json inputs, json result,
                 std::vector<std::string> diagnostics);

json load_json_file(const std::string& path);

// Structural validation against the shipped schema files.  Supports the
// subset used by them: type, properties, required, additionalProperties,
// items, enum, pattern, oneOf, minItems, maxItems.
bool validate_schema(const json& value, const json& schema, std::string* error);

}  // namespace pws

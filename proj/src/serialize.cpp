#include "pws/serialize.hpp"

#include <fstream>
#include <regex>

namespace pws {

std::string group_name(int rank) {
  return rank == 1 ? "sl2r" : "sl2r^" + std::to_string(rank);
}

int parse_group(const std::string& s) {
  if (s == "sl2r") return 1;
  if (s.rfind("sl2r^", 0) == 0) {
    const std::string d = s.substr(5);
    if (!d.empty() && d.find_first_not_of("0123456789") == std::string::npos) {
      const int rank = std::stoi(d);
      if (rank >= 2) return rank;
    }
  }
  throw std::invalid_argument("unknown group '" + s + "' (want sl2r or sl2r^d)");
}

json rational_to_json(const Rational& c) { return c.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::from_string(j.get<std::string>());
  throw std::invalid_argument("rational: expected integer or \"p/q\" string");
}

json poly_to_json(const EvenPoly& p) {
  json out = json::array();
  if (p.nvars() == 1) {
    for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
  } else {
    p.for_each_term([&](const std::vector<int>& e, const Rational& c) {
      out.push_back(json::array({json(e), rational_to_json(c)}));
    });
  }
  return out;
}

EvenPoly poly_from_json(const json& j, int rank) {
  if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array");
  if (rank == 1) {
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(rational_from_json(e));
    return EvenPoly::from_coeffs(std::move(c));
  }
  std::vector<std::pair<std::vector<int>, Rational>> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_array())
      throw std::invalid_argument("polynomial term: expected [[e1..ed], coeff]");
    std::vector<int> e = t[0].get<std::vector<int>>();
    terms.emplace_back(std::move(e), rational_from_json(t[1]));
  }
  return EvenPoly::from_terms(rank, terms);
}

json ktype_to_json(const KType& k) {
  if (k.rank() == 1) return k.value();
  return json(k.weights());
}

KType ktype_from_json(const json& j, int rank) {
  if (rank == 1) {
    if (!j.is_number_integer()) throw std::invalid_argument("K-type: expected an integer");
    return KType(j.get<int>());
  }
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw std::invalid_argument("K-type: expected a weight tuple of length " +
                                std::to_string(rank));
  return KType(j.get<std::vector<int>>());
}

json operator_to_json(const Level3Operator& p) {
  json entries = json::array();
  for (int i = 0; i < p.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < p.cols(); ++j) row.push_back(poly_to_json(p.entry(i, j)));
    entries.push_back(std::move(row));
  }
  json sources = json::array(), targets = json::array();
  for (const auto& k : p.sources()) sources.push_back(ktype_to_json(k));
  for (const auto& k : p.targets()) targets.push_back(ktype_to_json(k));
  return json{{"group", group_name(p.rank())},
              {"sources", std::move(sources)},
              {"targets", std::move(targets)},
              {"entries", std::move(entries)}};
}

Level3Operator operator_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("operator: expected an object");
  for (const char* key : {"group", "sources", "targets", "entries"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("operator: missing field '") + key + "'");
  const int rank = parse_group(j["group"].get<std::string>());
  std::vector<KType> sources, targets;
  for (const auto& k : j["sources"]) sources.push_back(ktype_from_json(k, rank));
  for (const auto& k : j["targets"]) targets.push_back(ktype_from_json(k, rank));
  const json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != targets.size())
    throw std::invalid_argument("operator: entries must have one row per target");
  std::vector<EvenPoly> flat;
  flat.reserve(sources.size() * targets.size());
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != sources.size())
      throw std::invalid_argument("operator: each row needs one entry per source");
    for (const auto& cell : row) flat.push_back(poly_from_json(cell, rank));
  }
  return Level3Operator(std::move(sources), std::move(targets), std::move(flat));
}

json rhs_to_json(const std::vector<EvenPoly>& h) {
  json hs = json::array();
  for (const auto& p : h) hs.push_back(poly_to_json(p));
  return json{{"h", std::move(hs)}};
}

std::vector<EvenPoly> rhs_from_json(const json& j, int rank) {
  if (!j.is_object() || !j.contains("h") || !j["h"].is_array())
    throw std::invalid_argument("rhs: expected { \"h\": [poly, ...] }");
  std::vector<EvenPoly> h;
  for (const auto& e : j["h"]) h.push_back(poly_from_json(e, rank));
  return h;
}

json section_to_json(const Level2Section& s) {
  json targets = json::array();
  for (const auto& k : s.targets()) targets.push_back(ktype_to_json(k));
  json comps = json::array();
  for (const auto& [mu, v] : s.components()) {
    json hs = json::array();
    for (const auto& c : v.components) hs.push_back(poly_to_json(c.h));
    comps.push_back(json{{"mu", ktype_to_json(mu)}, {"h", std::move(hs)}});
  }
  return json{{"group", group_name(s.rank())},
              {"targets", std::move(targets)},
              {"components", std::move(comps)}};
}

Level2Section section_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("section: expected an object");
  for (const char* key : {"group", "targets", "components"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("section: missing field '") + key + "'");
  const int rank = parse_group(j["group"].get<std::string>());
  std::vector<KType> targets;
  for (const auto& k : j["targets"]) targets.push_back(ktype_from_json(k, rank));
  std::vector<Level3Vector> comps;
  for (const auto& c : j["components"]) {
    if (!c.is_object() || !c.contains("mu") || !c.contains("h"))
      throw std::invalid_argument("section component: expected { \"mu\": ..., \"h\": [...] }");
    const KType mu = ktype_from_json(c["mu"], rank);
    std::vector<EvenPoly> h;
    for (const auto& e : c["h"]) h.push_back(poly_from_json(e, rank));
    comps.push_back(Level3Vector::make(mu, targets, std::move(h)));
  }
  return Level2Section::assemble(comps, targets);
}

json solve_report_to_json(const SolveReport& rep) {
  json out{{"status", to_string(rep.status)}, {"method", to_string(rep.method)}};
  if (rep.solution) {
    json hs = json::array();
    for (const auto& c : rep.solution->components) hs.push_back(poly_to_json(c.h));
    out["solution"] = json{{"h", std::move(hs)}};
  } else {
    out["solution"] = nullptr;
  }
  if (!rep.certificate.empty()) out["certificate"] = rep.certificate;
  return out;
}

json make_report(const std::string& command, json inputs, json result,
                 std::vector<std::string> diagnostics) {
  return json{{"command", command},
              {"inputs", std::move(inputs)},
              {"result", std::move(result)},
              {"diagnostics", json(std::move(diagnostics))}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("parse error in '" + path + "': " + e.what());
  }
  return j;
}

namespace {

bool type_matches(const json& value, const std::string& t) {
  if (t == "object") return value.is_object();
  if (t == "array") return value.is_array();
  if (t == "string") return value.is_string();
  if (t == "integer") return value.is_number_integer();
  if (t == "number") return value.is_number();
  if (t == "boolean") return value.is_boolean();
  if (t == "null") return value.is_null();
  return false;
}

bool validate_at(const json& value, const json& schema, const std::string& where,
                 std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = where + ": " + msg;
    return false;
  };
  if (schema.contains("oneOf")) {
    for (const auto& sub : schema["oneOf"]) {
      std::string scratch;
      if (validate_at(value, sub, where, &scratch)) return true;
    }
    return fail("matches no oneOf alternative");
  }
  if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>()))
    return fail("expected type " + schema["type"].get<std::string>());
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"])
      if (e == value) found = true;
    if (!found) return fail("value not in enum");
  }
  if (schema.contains("pattern") && value.is_string()) {
    const std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_match(value.get<std::string>(), re)) return fail("pattern mismatch");
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema["required"])
        if (!value.contains(k.get<std::string>()))
          return fail("missing required field '" + k.get<std::string>() + "'");
    const json props = schema.value("properties", json::object());
    for (const auto& [k, v] : value.items()) {
      if (props.contains(k)) {
        if (!validate_at(v, props[k], where + "." + k, error)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema["additionalProperties"].is_boolean() &&
                 !schema["additionalProperties"].get<bool>()) {
        return fail("unexpected field '" + k + "'");
      }
    }
  }
  if (value.is_array()) {
    if (schema.contains("minItems") && value.size() < schema["minItems"].get<size_t>())
      return fail("too few items");
    if (schema.contains("maxItems") && value.size() > schema["maxItems"].get<size_t>())
      return fail("too many items");
    if (schema.contains("items")) {
      for (size_t i = 0; i < value.size(); ++i)
        if (!validate_at(value[i], schema["items"], where + "[" + std::to_string(i) + "]", error))
          return false;
    }
  }
  return true;
}

}  // namespace

bool validate_schema(const json& value, const json& schema, std::string* error) {
  return validate_at(value, schema, "$", error);
}

}  // namespace pws

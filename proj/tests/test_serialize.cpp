#include <doctest.h>

#include <fstream>

#include "pws/serialize.hpp"
#include "test_util.hpp"

using namespace pws;
namespace tu = pws::testutil;

#ifndef PWS_FIXTURE_DIR
#define PWS_FIXTURE_DIR "fixtures"
#endif
#ifndef PWS_SCHEMA_DIR
#define PWS_SCHEMA_DIR "schemas"
#endif

namespace {

json load_schema(const std::string& name) {
  return load_json_file(std::string(PWS_SCHEMA_DIR) + "/" + name);
}

json load_fixture(const std::string& name) {
  return load_json_file(std::string(PWS_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("group names round-trip") {
  CHECK(group_name(1) == "sl2r");
  CHECK(group_name(2) == "sl2r^2");
  CHECK(parse_group("sl2r") == 1);
  CHECK(parse_group("sl2r^3") == 3);
  CHECK_THROWS_AS(parse_group("sl3r"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("sl2r^1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_group("sl2r^0"), std::invalid_argument);
}

TEST_CASE("rational serialization accepts strings and integers") {
  CHECK(rational_to_json(Rational(3, 4)) == json("3/4"));
  CHECK(rational_to_json(Rational(-2)) == json("-2"));
  CHECK(rational_from_json(json("3/4")) == Rational(3, 4));
  CHECK(rational_from_json(json(5)) == Rational(5));
  CHECK_THROWS_AS(rational_from_json(json("x")), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("polynomials round-trip both storage forms") {
  auto rng = tu::make_rng(111);
  for (int i = 0; i < 60; ++i) {
    const EvenPoly p = tu::random_even_poly(rng, 4);
    CHECK(poly_from_json(poly_to_json(p), 1) == p);
  }
  for (int i = 0; i < 60; ++i) {
    const EvenPoly p = tu::random_even_poly(rng, 3, 2);
    CHECK(poly_from_json(poly_to_json(p), 2) == p);
  }
  // golden forms
  CHECK(poly_to_json(EvenPoly::from_coeffs({Rational(-1), Rational(1)})) ==
        json::parse(R"(["-1","1"])"));
  const EvenPoly t2 = EvenPoly::variable(1, 2);
  CHECK(poly_to_json(t2) == json::parse(R"([[[0,1],"1"]])"));
  CHECK(poly_from_json(json::array(), 1) == EvenPoly::zero());
  CHECK(poly_from_json(json::array(), 2) == EvenPoly::zero(2));
}

TEST_CASE("K-types serialize as integers or weight tuples") {
  CHECK(ktype_to_json(KType(4)) == json(4));
  CHECK(ktype_to_json(KType({1, -2})) == json::parse("[1,-2]"));
  CHECK(ktype_from_json(json(4), 1) == KType(4));
  CHECK(ktype_from_json(json::parse("[1,-2]"), 2) == KType({1, -2}));
  CHECK_THROWS_AS(ktype_from_json(json("4"), 1), std::invalid_argument);
  CHECK_THROWS_AS(ktype_from_json(json::parse("[1]"), 2), std::invalid_argument);
}

TEST_CASE("operators round-trip through JSON") {
  auto rng = tu::make_rng(112);
  for (int i = 0; i < 40; ++i) {
    const Level3Operator p = tu::random_operator(rng, 1 + static_cast<int>(rng() % 3),
                                                 1 + static_cast<int>(rng() % 3),
                                                 static_cast<int>(rng() % 2), 8, 3);
    const Level3Operator back = operator_from_json(operator_to_json(p));
    CHECK(back == p);
  }
}

TEST_CASE("operator_from_json validates structure") {
  json good = load_fixture("bezout_demo_op.json");
  CHECK_NOTHROW(operator_from_json(good));
  json bad = good;
  bad["group"] = "su3";
  CHECK_THROWS_AS(operator_from_json(bad), std::invalid_argument);
  bad = good;
  bad["entries"][0].erase(1);  // ragged row
  CHECK_THROWS_AS(operator_from_json(bad), std::invalid_argument);
  bad = good;
  bad.erase("targets");
  CHECK_THROWS_AS(operator_from_json(bad), std::invalid_argument);
  bad = good;
  bad["sources"][0] = 1;  // parity break with a nonzero entry
  CHECK_THROWS_AS(operator_from_json(bad), ParityError);
}

TEST_CASE("rhs and section files round-trip") {
  const std::vector<EvenPoly> h{EvenPoly::one(), EvenPoly::variable()};
  CHECK(rhs_from_json(rhs_to_json(h), 1) == h);

  const std::vector<KType> targets{KType(0)};
  std::vector<Level3Vector> comps;
  comps.push_back(Level3Vector::make(KType(2), targets, {EvenPoly::variable()}));
  comps.push_back(Level3Vector::make(KType(0), targets, {EvenPoly::one()}));
  const Level2Section s = Level2Section::assemble(comps, targets);
  const Level2Section back = section_from_json(section_to_json(s));
  CHECK(back.targets() == s.targets());
  CHECK(back.components().size() == s.components().size());
  for (const auto& [mu, v] : s.components()) CHECK(back.components().at(mu) == v);
}

TEST_CASE("solve reports serialize with status, method and certificate") {
  SolveReport rep;
  rep.status = SolveStatus::unsolvable;
  rep.method = SolveMethod::bezout_single_row;
  rep.certificate = "t ∤ 1";
  const json j = solve_report_to_json(rep);
  CHECK(j["status"] == "unsolvable");
  CHECK(j["method"] == "bezout_single_row");
  CHECK(j["certificate"] == "t ∤ 1");
  CHECK(j["solution"].is_null());
}

TEST_CASE("fixtures validate against the shipped schemas") {
  const json op_schema = load_schema("operator.schema.json");
  const json rhs_schema = load_schema("rhs.schema.json");
  const json sec_schema = load_schema("section.schema.json");
  std::string err;
  for (const char* f : {"identity_op.json", "bezout_demo_op.json", "diag_tt_op.json",
                        "exact_P.json", "exact_Q.json", "uniformity_P.json",
                        "product_op.json"}) {
    CAPTURE(f);
    CHECK_MESSAGE(validate_schema(load_fixture(f), op_schema, &err), err);
  }
  for (const char* f : {"bezout_demo_rhs.json", "rhs_ones.json", "uniformity_u.json",
                        "product_rhs.json"}) {
    CAPTURE(f);
    CHECK_MESSAGE(validate_schema(load_fixture(f), rhs_schema, &err), err);
  }
  CHECK_MESSAGE(validate_schema(load_fixture("section_const.json"), sec_schema, &err), err);
}

TEST_CASE("serializer output validates against the schemas too") {
  auto rng = tu::make_rng(113);
  const json op_schema = load_schema("operator.schema.json");
  std::string err;
  for (int i = 0; i < 20; ++i) {
    const Level3Operator p = tu::random_operator(rng, 1 + static_cast<int>(rng() % 2),
                                                 1 + static_cast<int>(rng() % 2),
                                                 static_cast<int>(rng() % 2), 6, 2);
    CHECK_MESSAGE(validate_schema(operator_to_json(p), op_schema, &err), err);
  }
  const json report_schema = load_schema("report.schema.json");
  const json rep = make_report("solve", json{{"operator", "x.json"}},
                               json{{"status", "solved"}}, {"note"});
  CHECK_MESSAGE(validate_schema(rep, report_schema, &err), err);
}

TEST_CASE("validate_schema rejects structural violations") {
  const json op_schema = load_schema("operator.schema.json");
  std::string err;
  json bad = load_fixture("identity_op.json");
  bad["group"] = "su3";
  CHECK(!validate_schema(bad, op_schema, &err));
  CHECK(err.find("group") != std::string::npos);

  bad = load_fixture("identity_op.json");
  bad["extra"] = 1;
  CHECK(!validate_schema(bad, op_schema, &err));

  bad = load_fixture("identity_op.json");
  bad.erase("sources");
  CHECK(!validate_schema(bad, op_schema, &err));

  bad = load_fixture("identity_op.json");
  bad["entries"][0][0] = json::parse(R"(["1.5"])");  // floats fail the rational pattern
  CHECK(!validate_schema(bad, op_schema, &err));
}

TEST_CASE("load_json_file reports open and parse failures") {
  CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), std::invalid_argument);
  const std::string tmp = "/tmp/pws_bad.json";
  std::ofstream(tmp) << "{ not json";
  CHECK_THROWS_AS(load_json_file(tmp), std::invalid_argument);
}

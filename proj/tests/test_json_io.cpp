#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncorlicz/json_io.hpp"
#include "ncorlicz/norms.hpp"

using namespace nco;
using nlohmann::json;

TEST_CASE("phi descriptors") {
  CHECK(phi_from_json(json::parse(R"({"family":"power","alpha":2.0})")).value(3.0) ==
        doctest::Approx(9.0));
  CHECK(phi_from_json(json::parse(R"({"family":"expm"})")).value(1.0) ==
        doctest::Approx(std::exp(1.0) - 2.0));
  CHECK(phi_from_json(json::parse(R"({"family":"linlog"})")).value(0.0) == 0.0);
  const auto tab = phi_from_json(
      json::parse(R"({"family":"table","u":[0.0,1.0,2.0,3.0],"phi":[0.0,1.0,4.0,9.0]})"));
  CHECK(tab.value(2.0) == doctest::Approx(4.0));
  const auto mid = phi_from_json(json::parse(
      R"({"family":"intermediate","phi1":{"family":"power","alpha":1.5},"phi2":{"family":"power","alpha":2.0},"s":0.4})"));
  CHECK(mid.value(2.0) == doctest::Approx(std::pow(2.0, 5.0 / 3.0)));

  CHECK_THROWS_AS(phi_from_json(json::parse(R"({"family":"bogus"})")), std::invalid_argument);
  CHECK_THROWS_AS(phi_from_json(json::parse(R"({"alpha":2.0})")), std::invalid_argument);
}

TEST_CASE("operator round trip") {
  const TracialAlgebra alg({{2, 1.0}, {3, 0.5}});
  const Operator a = random_operator(alg, OperatorKind::general, 1.0, 42);
  const json j = operator_to_json(a);
  CHECK(j.at("entries").size() == 2);
  CHECK(j.at("entries")[0].size() == 2);
  CHECK(j.at("entries")[0][0][0].size() == 2);  // [re, im]
  const Operator back = operator_from_json(j);
  CHECK((a - back).max_abs() == 0.0);
  CHECK(back.algebra() == alg);

  SUBCASE("shape errors") {
    json bad = j;
    bad["entries"][0].erase(0);
    CHECK_THROWS_AS(operator_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("tuple space descriptor") {
  const json j = json::parse(R"({
    "components": [
      {"phi": {"family":"power","alpha":2.0},
       "algebra": {"blocks":[{"dim":2,"trace_scale":1.0}]}},
      {"phi": {"family":"expm"},
       "algebra": {"blocks":[{"dim":3,"trace_scale":0.5}]}}
    ],
    "weights": [0.5, 2.0],
    "p": 2.0,
    "gauge": "luxemburg"})");
  const TupleSpace space = tuple_space_from_json(j);
  CHECK(space.size() == 2);
  CHECK(space.weight(1) == 2.0);
  CHECK(space.exponent() == 2.0);
  CHECK(space.gauge() == Gauge::luxemburg);

  json inf = j;
  inf["p"] = "inf";
  CHECK(tuple_space_from_json(inf).exponent() == std::numeric_limits<double>::infinity());

  json bad = j;
  bad["gauge"] = "weird";
  CHECK_THROWS_AS(tuple_space_from_json(bad), std::invalid_argument);
}

TEST_CASE("tuple linear operator schema") {
  const json j = json::parse(R"({
    "coeffs": [[{"re":1,"im":0},{"re":1,"im":0}],
               [{"re":1,"im":0},{"re":-1,"im":0}]],
    "left": null, "right": null})");
  const TupleLinearOperator t = tuple_linear_operator_from_json(j);
  CHECK(t.rows() == 2);
  CHECK(t.coeffs()(1, 1) == std::complex<double>(-1.0, 0.0));
  const json back = tuple_linear_operator_to_json(t);
  CHECK(back.at("left").is_null());
  CHECK(tuple_linear_operator_from_json(back).coeffs() == t.coeffs());

  SUBCASE("multipliers survive the round trip") {
    TupleLinearOperator with_mult = t;
    const TracialAlgebra alg = TracialAlgebra::full_matrix(2);
    with_mult.set_left(0, 1, random_operator(alg, OperatorKind::general, 1.0, 5));
    const json dumped = tuple_linear_operator_to_json(with_mult);
    const TupleLinearOperator read = tuple_linear_operator_from_json(dumped);
    CHECK(read.left(0, 1).has_value());
    CHECK((*read.left(0, 1) - *with_mult.left(0, 1)).max_abs() == 0.0);
    CHECK_FALSE(read.left(1, 0).has_value());
  }
}

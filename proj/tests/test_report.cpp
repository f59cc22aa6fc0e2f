#include <doctest.h>

#include "affhecke/report.hpp"

using namespace affhecke;
using report::Json;

TEST_SUITE("cli") {

TEST_CASE("empty report") {
  CHECK(report::emit(Json::object(), report::Format::json) == "{}\n");
}

TEST_CASE("json output is key-sorted and reproducible") {
  Json j;
  j["zeta"] = 1;
  j["alpha"] = {1, 2};
  j["mid"] = report::rational(make_rational(3, 6));
  const std::string a = report::emit(j, report::Format::json);
  CHECK(a.find("alpha") < a.find("mid"));
  CHECK(a.find("mid") < a.find("zeta"));
  CHECK(a.find("\"1/2\"") != std::string::npos);
  CHECK(report::emit(Json::parse(a), report::Format::json) == a);
  CHECK(report::emit(j, report::Format::json) == a);
}

TEST_CASE("table output is an aligned two-column table") {
  Json j = {{"E", {3, 1}}, {"lambda", "2,1"}};
  CHECK(report::emit(j, report::Format::table) == "E       [3,1]\nlambda  2,1\n");
}

TEST_CASE("rational formatting") {
  CHECK(report::rational(Rational(4)) == Json(4));
  CHECK(report::rational(make_rational(-2, 4)) == Json("-1/2"));
  CHECK(report::rational(Rational(BigInt("123456789012345678901234567890"))) == Json("123456789012345678901234567890"));
}

TEST_CASE("multisegments and hook verdicts") {
  const Json m = report::multisegment(Multisegment::parse("[0,1]+2[-1,-1]"));
  CHECK(m == Json::parse(R"([{"i":-1,"j":-1,"mult":2},{"i":0,"j":1,"mult":1}])"));
  const auto v = hook_criterion(Partition({2, 1}), {0, 3});
  const Json h = report::hook_verdict(Partition({2, 1}), {0, 3}, v);
  CHECK(h["simple"] == false);
  CHECK(h["violations"] == Json::parse("[[0,3,3]]"));
}

TEST_CASE("format names") {
  CHECK(report::parse_format("json") == report::Format::json);
  CHECK(report::parse_format("table") == report::Format::table);
  CHECK_THROWS(report::parse_format("xml"));
}

}  // TEST_SUITE

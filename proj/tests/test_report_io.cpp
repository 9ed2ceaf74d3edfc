#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "record_order/distribution.hpp"
#include "record_order/dist_spec.hpp"
#include "record_order/report_io.hpp"
#include "record_order/theorem_verify.hpp"

using namespace record_order;
using nlohmann::json;

TEST_CASE("dist spec grammar round trip") {
  const auto lomax = parse_dist_spec("lomax:shape=3,scale=1");
  CHECK(lomax.family() == Family::Lomax);
  CHECK(lomax.describe() == "lomax:shape=3,scale=1");

  const auto e = parse_dist_spec("exp:rate=3");
  CHECK(e.family() == Family::Exponential);
  CHECK(e.hazard(1.0) == 3.0);

  CHECK(parse_dist_spec("erlang:shape=3,rate=0.5").describe() == "erlang:shape=3,rate=0.5");
  CHECK(parse_dist_spec("invweibull:scale=2,shape=2").describe() ==
        "invweibull:shape=2,scale=2");

  // canonical spellings parse back to an identical law
  for (const char* text : {"weibull:shape=1.25,scale=0.75", "lomax:shape=2,scale=0.75"}) {
    const auto d = parse_dist_spec(text);
    CHECK(parse_dist_spec(d.describe()).describe() == d.describe());
  }
}

TEST_CASE("dist spec diagnostics carry the offending token") {
  try {
    parse_dist_spec("lomx:shape=3,scale=1");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.kind() == SpecErrorKind::UnknownFamily);
    CHECK(e.token() == "lomx");
    CHECK(e.offset() == 0);
  }

  try {
    parse_dist_spec("lomax:shape=-1,scale=1");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.kind() == SpecErrorKind::NonPositiveParam);
    CHECK(e.token() == "shape");
    CHECK(e.offset() == 6);
  }

  try {
    parse_dist_spec("lomax:shape=3");
    FAIL("expected a parse error");
  } catch (const SpecParseError& e) {
    CHECK(e.kind() == SpecErrorKind::MissingParam);
    CHECK(e.token() == "scale");
  }

  CHECK_THROWS_AS(parse_dist_spec("lomax:shape=3,shape=4,scale=1"), SpecParseError);
  CHECK_THROWS_AS(parse_dist_spec("lomax:width=3,scale=1"), SpecParseError);
  CHECK_THROWS_AS(parse_dist_spec("lomax:shape=abc,scale=1"), SpecParseError);
  CHECK_THROWS_AS(parse_dist_spec("lomax"), SpecParseError);
  CHECK_THROWS_AS(parse_dist_spec(""), SpecParseError);
  CHECK_THROWS_AS(parse_dist_spec("erlang:shape=2.5,rate=1"), SpecParseError);
}

TEST_CASE("theorem report JSON re-parses with the published fields") {
  const auto r = verify_theorem2(DistributionModel::lomax(3.0, 1.0),
                                 DistributionModel::lomax(2.0, 0.75), 3, 2);
  const json j = json::parse(theorem_report_to_json(r));
  CHECK(j.at("schema").get<int>() == kReportSchemaVersion);
  CHECK(j.at("theorem").get<std::string>() == "T2");
  CHECK(j.at("m").get<int>() == 3);
  CHECK(j.at("n").get<int>() == 2);
  CHECK(j.at("overall").get<std::string>() == "pass");
  CHECK(j.at("sup").get<double>() == doctest::Approx(1.125).epsilon(1e-9));
  CHECK(j.at("c0").get<double>() == doctest::Approx(1.125).epsilon(1e-9));
  CHECK(j.at("c1").get<double>() == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(j.at("hypothesis_checks").is_array());
  CHECK(j.at("hypothesis_checks").size() == 2);
  for (const auto& h : j.at("hypothesis_checks")) {
    CHECK(h.contains("name"));
    CHECK(h.contains("pass"));
  }
  const auto& c = j.at("conclusion_check");
  for (const char* key : {"order", "status", "witness", "margin", "grid"})
    CHECK(c.contains(key));
  CHECK(j.at("limits").contains("at_zero"));
  CHECK(j.at("limits").contains("diagnostics"));
}

TEST_CASE("verdict and supremum JSON docs are self-contained") {
  const auto v = check_st(DistributionModel::lomax(3.0, 1.0),
                          DistributionModel::lomax(2.0, 0.75));
  const json jv = json::parse(verdict_to_json(v));
  CHECK(jv.at("schema") == 1);
  CHECK(jv.at("order") == "st");
  CHECK(jv.at("status") == "holds");

  const auto s = sup_psi_ratio(2, 3, 1.5, RecordSide::UpperRecords);
  const json js = json::parse(supremum_to_json(s));
  CHECK(js.at("value").get<double>() == doctest::Approx(1.125).epsilon(1e-9));
  CHECK(js.at("location") == "boundary-zero");
  CHECK(js.at("attained") == false);
  CHECK(js.at("iterates").is_array());
}

TEST_CASE("example bundle JSON lists curves and checks") {
  const auto b = reproduce_example(ExampleId::Erlang);
  const json j = json::parse(example_bundle_to_json(b));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("curves").size() == 1);
  CHECK(j.at("curve_checks")[0].at("pass") == true);
  CHECK(j.at("report").at("theorem") == "T1");
}

TEST_CASE("curve CSV has exactly two columns per row") {
  const CurveSeries c = sample_curve("demo", "t", {0.5, 1.0, 2.0},
                                     [](double t) { return t * t; });
  std::istringstream in(curve_to_csv(c));
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,value");
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 1);
    ++rows;
  }
  CHECK(rows == 3);
  // 17 significant digits survive a parse round trip
  const CurveSeries fine = sample_curve("pi", "t", {1.0 / 3.0},
                                        [](double) { return 3.141592653589793; });
  std::istringstream fin(curve_to_csv(fine));
  std::getline(fin, line);
  std::getline(fin, line);
  double t = 0.0, v = 0.0;
  CHECK(std::sscanf(line.c_str(), "%lf,%lf", &t, &v) == 2);
  CHECK(t == 1.0 / 3.0);
  CHECK(v == 3.141592653589793);
}

TEST_CASE("exit codes are a function of the verdict alone") {
  CHECK(exit_code_for(VerdictStatus::Holds) == 0);
  CHECK(exit_code_for(VerdictStatus::Violated) == 2);
  CHECK(exit_code_for(VerdictStatus::Inconclusive) == 3);
  CHECK(exit_code_for(TheoremOutcome::Pass) == 0);
  CHECK(exit_code_for(TheoremOutcome::HypothesisFailed) == 2);
  CHECK(exit_code_for(TheoremOutcome::ConclusionRefuted) == 2);

  // synthetic verdicts: the code depends on status, never on the payload
  for (auto status :
       {VerdictStatus::Holds, VerdictStatus::Violated, VerdictStatus::Inconclusive}) {
    OrderVerdict a{OrderRelation::St, status, {}, 0.25, "grid-a"};
    OrderVerdict b{OrderRelation::TP2, status, {1.0, 2.0}, -0.5, "grid-b"};
    CHECK(exit_code_for(a.status) == exit_code_for(b.status));
  }
}

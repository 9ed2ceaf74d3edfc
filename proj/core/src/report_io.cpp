#include "record_order/report_io.hpp"

#include <nlohmann/json.hpp>

namespace record_order {

using nlohmann::json;

std::string order_name(OrderRelation order) {
  switch (order) {
    case OrderRelation::St: return "st";
    case OrderRelation::Hr: return "hr";
    case OrderRelation::Rh: return "rh";
    case OrderRelation::AgingFasterHr: return "c";
    case OrderRelation::AgingFasterRhr: return "b";
    case OrderRelation::IFR: return "ifr";
    case OrderRelation::DRHR: return "drhr";
    case OrderRelation::TP2: return "tp2";
    case OrderRelation::RR2: return "rr2";
  }
  return "?";
}

std::string status_name(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Violated: return "violated";
    case VerdictStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string outcome_name(TheoremOutcome outcome) {
  switch (outcome) {
    case TheoremOutcome::Pass: return "pass";
    case TheoremOutcome::HypothesisFailed: return "hypothesis-failed";
    case TheoremOutcome::ConclusionRefuted: return "conclusion-refuted";
  }
  return "?";
}

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "T1";
    case TheoremId::T2: return "T2";
    case TheoremId::T3: return "T3";
    case TheoremId::T4: return "T4";
  }
  return "?";
}

std::string sup_location_name(SupLocation loc) {
  switch (loc) {
    case SupLocation::Interior: return "interior";
    case SupLocation::BoundaryZero: return "boundary-zero";
    case SupLocation::BoundaryOne: return "boundary-one";
  }
  return "?";
}

namespace {

json verdict_json(const OrderVerdict& v) {
  json j;
  j["order"] = order_name(v.order);
  j["status"] = status_name(v.status);
  j["witness"] = v.witness.empty() ? json(nullptr) : json(v.witness);
  j["margin"] = v.margin;
  j["grid"] = v.grid;
  return j;
}

json supremum_json(const SupremumReport& s) {
  json j;
  j["value"] = s.value;
  j["location"] = sup_location_name(s.location);
  if (s.location == SupLocation::Interior) j["location_s"] = s.location_s;
  j["iterates"] = s.iterates;
  j["attained"] = s.attained;
  return j;
}

json limits_json(const LimitPair& lp) {
  json j;
  j["at_zero"] = lp.at_zero;
  j["at_infinity"] = lp.at_infinity;
  j["diagnostics"] = {{"at_zero", lp.iterates_zero}, {"at_infinity", lp.iterates_infinity}};
  return j;
}

json theorem_json(const TheoremReport& r) {
  json j;
  j["schema"] = kReportSchemaVersion;
  j["theorem"] = theorem_name(r.theorem);
  j["m"] = r.m;
  j["n"] = r.n;
  j["x"] = r.x_spec;
  j["y"] = r.y_spec;
  json hyps = json::array();
  for (const HypothesisCheck& h : r.hypothesis_checks) {
    json hj;
    hj["name"] = h.name;
    hj["pass"] = h.pass;
    if (h.verdict) hj["verdict"] = verdict_json(*h.verdict);
    if (h.supremum) {
      hj["supremum"] = supremum_json(*h.supremum);
      hj["bound"] = h.bound ? json(*h.bound) : json(nullptr);
      hj["boundary_equality"] = h.boundary_equality;
    }
    hyps.push_back(std::move(hj));
  }
  j["hypothesis_checks"] = std::move(hyps);
  j["conclusion_check"] = verdict_json(r.conclusion_check);
  if (r.limits) {
    j["limits"] = limits_json(*r.limits);
    const bool starred = r.theorem == TheoremId::T4;
    j[starred ? "c0_star" : "c0"] = r.limits->at_zero;
    j[starred ? "c1_star" : "c1"] = r.limits->at_infinity;
  }
  for (const HypothesisCheck& h : r.hypothesis_checks)
    if (h.supremum) j["sup"] = h.supremum->value;
  j["overall"] = outcome_name(r.overall);
  return j;
}

std::string render(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump(); }

}  // namespace

std::string verdict_to_json(const OrderVerdict& v, bool pretty) {
  json j = verdict_json(v);
  j["schema"] = kReportSchemaVersion;
  return render(j, pretty);
}

std::string supremum_to_json(const SupremumReport& s, bool pretty) {
  json j = supremum_json(s);
  j["schema"] = kReportSchemaVersion;
  return render(j, pretty);
}

std::string limits_to_json(const LimitPair& lp, bool pretty) {
  json j = limits_json(lp);
  j["schema"] = kReportSchemaVersion;
  return render(j, pretty);
}

std::string theorem_report_to_json(const TheoremReport& r, bool pretty) {
  return render(theorem_json(r), pretty);
}

std::string example_bundle_to_json(const ExampleBundle& b, bool pretty) {
  json j;
  j["schema"] = kReportSchemaVersion;
  j["title"] = b.title;
  json checks = json::array();
  for (const CurveCheck& c : b.checks) {
    checks.push_back({{"curve", c.curve},
                      {"property", c.property},
                      {"pass", c.pass},
                      {"value", c.value}});
  }
  j["curve_checks"] = std::move(checks);
  json curves = json::array();
  for (const CurveSeries& c : b.curves)
    curves.push_back({{"name", c.name}, {"abscissa", c.abscissa}, {"points", c.t.size()}});
  j["curves"] = std::move(curves);
  j["report"] = json::parse(theorem_report_to_json(b.report, false));
  return render(j, pretty);
}

int exit_code_for(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Holds: return 0;
    case VerdictStatus::Violated: return 2;
    case VerdictStatus::Inconclusive: return 3;
  }
  return 1;
}

int exit_code_for(TheoremOutcome outcome) {
  switch (outcome) {
    case TheoremOutcome::Pass: return 0;
    case TheoremOutcome::HypothesisFailed: return 2;
    case TheoremOutcome::ConclusionRefuted: return 2;
  }
  return 1;
}

}  // namespace record_order

// Command-line front end: order checks, record-law curves, theorem
// verification, worked-example reproduction, and record simulation.
//
// Exit codes: 0 pass/holds, 2 violated/refuted, 3 inconclusive,
// 1 usage or runtime error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "record_order/dist_spec.hpp"
#include "record_order/report_io.hpp"
#include "record_order/sim_oracle.hpp"
#include "record_order/theorem_verify.hpp"

namespace {

using namespace record_order;

int default_grid_points() {
  if (const char* env = std::getenv("RECORD_ORDER_GRID_POINTS")) {
    const int n = std::atoi(env);
    if (n >= 2) return n;
  }
  return GridSpec::defaults().count;
}

GridSpec parse_grid_option(const std::string& text) {
  GridSpec spec = GridSpec::defaults();
  spec.count = default_grid_points();
  if (text.empty()) return spec;
  double lo, hi;
  int count;
  char kind[8] = "log";
  const int fields = std::sscanf(text.c_str(), "%lf:%lf:%d:%7s", &lo, &hi, &count, kind);
  if (fields < 3) throw CLI::ValidationError("--grid", "expected lo:hi:count[:log|lin]");
  spec.lo = lo;
  spec.hi = hi;
  spec.count = count;
  const std::string k = kind;
  if (k == "lin" || k == "linear")
    spec.spacing = GridSpacing::Linear;
  else if (k == "log")
    spec.spacing = GridSpacing::Log;
  else
    throw CLI::ValidationError("--grid", "spacing must be log or lin");
  return spec;
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << payload;
}

std::string verdict_text(const OrderVerdict& v) {
  std::string line = order_name(v.order) + ": " + status_name(v.status);
  char buf[64];
  std::snprintf(buf, sizeof(buf), " (margin=%.3g", v.margin);
  line += buf;
  if (!v.witness.empty()) {
    line += ", witness=";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%s%.6g", i ? "," : "", v.witness[i]);
      line += buf;
    }
  }
  line += ", grid=" + v.grid + ")\n";
  return line;
}

std::string report_text(const TheoremReport& r) {
  std::string out = "theorem " + theorem_name(r.theorem) + "  m=" + std::to_string(r.m) +
                    " n=" + std::to_string(r.n) + "\n  X = " + r.x_spec +
                    "\n  Y = " + r.y_spec + "\n";
  char buf[128];
  if (r.limits) {
    std::snprintf(buf, sizeof(buf), "  limits: at_zero=%.9g at_infinity=%.9g\n",
                  r.limits->at_zero, r.limits->at_infinity);
    out += buf;
  }
  for (const HypothesisCheck& h : r.hypothesis_checks) {
    out += "  hypothesis [" + h.name + "]: " + (h.pass ? "pass" : "fail");
    if (h.supremum) {
      std::snprintf(buf, sizeof(buf), " (sup=%.9g vs bound=%.9g%s)", h.supremum->value,
                    h.bound.value_or(0.0), h.boundary_equality ? ", boundary equality" : "");
      out += buf;
    }
    out += "\n";
  }
  out += "  conclusion: " + verdict_text(r.conclusion_check);
  out += "  overall: " + outcome_name(r.overall) + "\n";
  return out;
}

struct CommonArgs {
  std::string grid_text;
  std::string out_path;
  std::string format = "text";
};

int run_order_check(const std::string& order, const std::string& x_spec,
                    const std::string& y_spec, const CommonArgs& args) {
  const DistributionModel x = parse_dist_spec(x_spec);
  const DistributionModel y = parse_dist_spec(y_spec);
  const GridSpec spec = parse_grid_option(args.grid_text);
  OrderVerdict v;
  if (order == "st")
    v = check_st(x, y, spec);
  else if (order == "hr")
    v = check_hr(x, y, spec);
  else if (order == "rh")
    v = check_rh(x, y, spec);
  else if (order == "c")
    v = check_aging_faster(x, y, AgingMode::HazardRatio, spec);
  else
    v = check_aging_faster(x, y, AgingMode::ReversedHazardRatio, spec);
  emit(args.format == "json" ? verdict_to_json(v) : verdict_text(v), args.out_path);
  return exit_code_for(v.status);
}

int run_record_curve(const std::string& quantity, const std::string& kind_name, int n,
                     const std::string& dist_spec_text, const CommonArgs& args) {
  const DistributionModel d = parse_dist_spec(dist_spec_text);
  const RecordKind kind = kind_name == "lower" ? RecordKind::Lower : RecordKind::Upper;
  const RecordLaw law(d, n, kind);
  const GridSpec spec = parse_grid_option(args.grid_text);
  const auto grid = effective_grid(d, spec);
  auto f = [&](double t) {
    if (quantity == "hazard") return law.hazard(t);
    if (quantity == "rhr") return law.rev_hazard(t);
    if (quantity == "pdf") return law.pdf(t);
    return law.sf(t);
  };
  const CurveSeries curve =
      sample_curve("record_" + quantity + "_" + kind_name + "_n" + std::to_string(n), "t",
                   grid, f);
  emit(curve_to_csv(curve), args.out_path);
  return 0;
}

int run_theorem_verify(int id, int m, int n, const std::string& x_spec,
                       const std::string& y_spec, const CommonArgs& args) {
  const DistributionModel x = parse_dist_spec(x_spec);
  const DistributionModel y = parse_dist_spec(y_spec);
  const GridSpec spec = parse_grid_option(args.grid_text);
  TheoremReport r;
  switch (id) {
    case 1: r = verify_theorem1(x, y, m, n, spec); break;
    case 2: r = verify_theorem2(x, y, m, n, spec); break;
    case 3: r = verify_theorem3(x, y, m, n, spec); break;
    default: r = verify_theorem4(x, y, m, n, spec); break;
  }
  emit(args.format == "text" ? report_text(r) : theorem_report_to_json(r), args.out_path);
  return exit_code_for(r.overall);
}

int run_example(const std::string& id_name, const std::string& out_dir,
                const std::string& grid_text) {
  ExampleId id;
  if (id_name == "erlang")
    id = ExampleId::Erlang;
  else if (id_name == "lomax-upper")
    id = ExampleId::LomaxUpper;
  else if (id_name == "invweibull-b")
    id = ExampleId::InvWeibullLower1;
  else
    id = ExampleId::InvWeibullLower2;

  const ExampleBundle bundle = reproduce_example(id, parse_grid_option(grid_text));
  std::filesystem::create_directories(out_dir);
  for (const CurveSeries& c : bundle.curves) {
    std::ofstream f(std::filesystem::path(out_dir) / (c.name + ".csv"), std::ios::binary);
    f << curve_to_csv(c);
  }
  {
    std::ofstream f(std::filesystem::path(out_dir) / (id_name + "_report.json"),
                    std::ios::binary);
    f << example_bundle_to_json(bundle);
  }
  std::cout << bundle.title << "\n";
  bool checks_ok = true;
  for (const CurveCheck& c : bundle.checks) {
    std::printf("  %s: %s (%s, value=%.9g)\n", c.curve.c_str(), c.pass ? "pass" : "fail",
                c.property.c_str(), c.value);
    checks_ok &= c.pass;
  }
  std::cout << "  theorem: " << outcome_name(bundle.report.overall) << "\n";
  if (!checks_ok) return 2;
  return exit_code_for(bundle.report.overall);
}

int run_simulate(const std::string& dist_spec_text, int n, const std::string& kind_name,
                 int count, std::uint64_t seed, const std::string& method_name,
                 const std::string& out_path) {
  const DistributionModel d = parse_dist_spec(dist_spec_text);
  const RecordKind kind = kind_name == "lower" ? RecordKind::Lower : RecordKind::Upper;
  const SampleMethod method =
      method_name == "scan" ? SampleMethod::SequentialScan : SampleMethod::GammaTransform;
  const SampleBatch batch = sample_records(d, n, kind, count, seed, method);
  emit(batch_to_csv(batch), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"record-value distributions and relative-aging order verification"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string order_format = "text";
  std::string theorem_format = "json";

  // order check
  auto* order_cmd = app.add_subcommand("order", "stochastic order checks");
  order_cmd->require_subcommand(1);
  auto* check_cmd = order_cmd->add_subcommand("check", "check an order relation on a grid");
  std::string order_name_arg, x_spec, y_spec;
  check_cmd->add_option("--order", order_name_arg, "one of st, hr, rh, c, b")
      ->required()
      ->check(CLI::IsMember({"st", "hr", "rh", "c", "b"}));
  check_cmd->add_option("X", x_spec, "left distribution spec")->required();
  check_cmd->add_option("Y", y_spec, "right distribution spec")->required();
  check_cmd->add_option("--grid", common.grid_text, "lo:hi:count[:log|lin]");
  check_cmd->add_option("--out", common.out_path, "write output to file");
  check_cmd->add_option("--format", order_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // record curves
  auto* record_cmd = app.add_subcommand("record", "record-law curves as CSV");
  record_cmd->require_subcommand(1);
  std::string rec_kind = "upper", rec_dist;
  int rec_n = 1;
  std::vector<CLI::App*> curve_cmds;
  for (const char* q : {"hazard", "rhr", "pdf", "sf"}) {
    auto* c = record_cmd->add_subcommand(q, std::string("emit the record ") + q + " curve");
    c->add_option("--kind", rec_kind, "upper or lower")
        ->check(CLI::IsMember({"upper", "lower"}));
    c->add_option("-n,--index", rec_n, "record index (n >= 1)")->required();
    c->add_option("DIST", rec_dist, "distribution spec")->required();
    c->add_option("--grid", common.grid_text, "lo:hi:count[:log|lin]");
    c->add_option("--out", common.out_path, "write CSV to file");
    curve_cmds.push_back(c);
  }

  // theorem verify
  auto* theorem_cmd = app.add_subcommand("theorem", "preservation theorem verification");
  theorem_cmd->require_subcommand(1);
  auto* verify_cmd = theorem_cmd->add_subcommand("verify", "verify hypotheses and conclusion");
  int thm_id = 1, thm_m = 1, thm_n = 1;
  verify_cmd->add_option("--id", thm_id, "theorem id (1-4)")
      ->required()
      ->check(CLI::Range(1, 4));
  verify_cmd->add_option("-m", thm_m, "record index for X")->required();
  verify_cmd->add_option("-n", thm_n, "record index for Y")->required();
  verify_cmd->add_option("X", x_spec, "left distribution spec")->required();
  verify_cmd->add_option("Y", y_spec, "right distribution spec")->required();
  verify_cmd->add_option("--grid", common.grid_text, "lo:hi:count[:log|lin]");
  verify_cmd->add_option("--out", common.out_path, "write report to file");
  verify_cmd->add_option("--format", theorem_format, "json or text")
      ->check(CLI::IsMember({"text", "json"}));

  // example reproduce
  auto* example_cmd = app.add_subcommand("example", "reproduce a worked example");
  example_cmd->require_subcommand(1);
  auto* reproduce_cmd = example_cmd->add_subcommand("reproduce", "emit figure CSVs + report");
  std::string example_id, example_out = ".";
  reproduce_cmd->add_option("--id", example_id, "example id")
      ->required()
      ->check(CLI::IsMember({"erlang", "lomax-upper", "invweibull-b", "invweibull-thm4"}));
  reproduce_cmd->add_option("--out", example_out, "output directory")->capture_default_str();
  reproduce_cmd->add_option("--grid", common.grid_text, "lo:hi:count[:log|lin]");

  // simulate records
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo record sampling");
  simulate_cmd->require_subcommand(1);
  auto* records_cmd = simulate_cmd->add_subcommand("records", "sample n-th record values");
  std::string sim_dist, sim_kind = "upper", sim_method = "gamma";
  int sim_n = 1, sim_count = 10000;
  std::uint64_t sim_seed = 1;
  records_cmd->add_option("DIST", sim_dist, "distribution spec")->required();
  records_cmd->add_option("-n,--index", sim_n, "record index")->required();
  records_cmd->add_option("--kind", sim_kind, "upper or lower")
      ->check(CLI::IsMember({"upper", "lower"}));
  records_cmd->add_option("--count", sim_count, "sample count")->capture_default_str();
  records_cmd->add_option("--seed", sim_seed, "64-bit seed")->capture_default_str();
  records_cmd->add_option("--method", sim_method, "gamma or scan")
      ->check(CLI::IsMember({"gamma", "scan"}));
  records_cmd->add_option("--out", common.out_path, "write CSV to file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help is success; any usage problem is 1
  }

  try {
    if (check_cmd->parsed()) {
      common.format = order_format;
      return run_order_check(order_name_arg, x_spec, y_spec, common);
    }
    for (std::size_t i = 0; i < curve_cmds.size(); ++i)
      if (curve_cmds[i]->parsed()) {
        static const char* kQuantities[] = {"hazard", "rhr", "pdf", "sf"};
        return run_record_curve(kQuantities[i], rec_kind, rec_n, rec_dist, common);
      }
    if (verify_cmd->parsed()) {
      common.format = theorem_format;
      return run_theorem_verify(thm_id, thm_m, thm_n, x_spec, y_spec, common);
    }
    if (reproduce_cmd->parsed()) return run_example(example_id, example_out, common.grid_text);
    if (records_cmd->parsed())
      return run_simulate(sim_dist, sim_n, sim_kind, sim_count, sim_seed, sim_method,
                          common.out_path);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 1;
}

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here in code.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "record_order/distribution.hpp"
#include "record_order/numerics.hpp"
#include "record_order/order_checks.hpp"
#include "record_order/record_law.hpp"
#include "record_order/report_io.hpp"
#include "record_order/sim_oracle.hpp"
#include "record_order/theorem_verify.hpp"
#include "record_order/xi_psi.hpp"

using namespace record_order;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const char* fmt, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, ap);
  va_end(ap);
  notes.push_back(buf);
}

void criterion(int id, const char* title, const std::function<bool()>& body) {
  notes.clear();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& ex) {
    note("exception: %s", ex.what());
  }
  std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, title);
  if (!ok)
    for (const auto& n : notes) std::printf("         %s\n", n.c_str());
  if (!ok) ++failures;
}

bool within(double value, double target, double tol, const char* what = nullptr) {
  if (std::abs(value - target) <= tol) return true;
  note("got %.12g, want %.12g +- %.3g%s%s", value, target, tol, what ? " for " : "",
       what ? what : "");
  return false;
}

std::vector<double> log_pts(double lo, double hi, int count) {
  std::vector<double> g(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(i * step);
  return g;
}

const DistributionModel kLomaxX = DistributionModel::lomax(3.0, 1.0);
const DistributionModel kLomaxY = DistributionModel::lomax(2.0, 0.75);
const DistributionModel kIwX = DistributionModel::inverse_weibull(2.0, 2.0);
const DistributionModel kIwY = DistributionModel::inverse_weibull(2.0, std::sqrt(5.0));
const DistributionModel kIw4X = DistributionModel::inverse_weibull(4.0, std::sqrt(2.0));
const DistributionModel kIw4Y = DistributionModel::inverse_weibull(4.0, std::pow(2.0, 0.25));

const HypothesisCheck* sup_check_of(const TheoremReport& r) {
  for (const auto& h : r.hypothesis_checks)
    if (h.supremum) return &h;
  return nullptr;
}

bool c1_upper_sup() {
  const auto rep = sup_psi_ratio(2, 3, 1.5, RecordSide::UpperRecords);
  bool ok = within(rep.value, 1.125, 1e-3, "sup value");
  if (rep.location != SupLocation::BoundaryZero) {
    note("sup located at %s, want the u->0+ boundary", sup_location_name(rep.location).c_str());
    ok = false;
  }
  return ok;
}

bool c2_lower_sup() {
  const double exponent = 1.0 / 2.0;  // 1/c0* with c0* = 2
  return within(sup_psi_ratio(2, 3, exponent, RecordSide::LowerRecords).value, 2.0, 1e-3,
                "sup value");
}

bool c3_limits() {
  const auto lomax = estimate_limits(kLomaxX, kLomaxY, RatioMode::Hazard);
  bool ok = within(lomax.at_zero, 1.125, 1e-6, "Lomax c0") &&
            within(lomax.at_infinity, 1.5, 1e-6, "Lomax c1");

  const auto iw = estimate_limits(kIwX, kIwY, RatioMode::ReversedHazard);
  ok &= within(iw.at_zero, 0.8, 1e-9, "inverse-Weibull c0*");
  ok &= within(iw.at_infinity, 0.8, 1e-9, "inverse-Weibull c1*");
  for (const auto& seq : {iw.iterates_zero, iw.iterates_infinity})
    for (double r : seq)
      if (std::abs(r - 0.8) > 1e-12) {
        note("rhr ratio iterate %.17g strays from the constant 0.8", r);
        ok = false;
      }

  const auto iw4 = estimate_limits(kIw4X, kIw4Y, RatioMode::ReversedHazard);
  ok &= within(iw4.at_zero, 2.0, 1e-6, "shape-4 c0*");
  ok &= within(iw4.at_infinity, 2.0, 1e-6, "shape-4 c1*");
  return ok;
}

bool c4_theorem1_erlang() {
  const auto x = DistributionModel::exponential(3.0);
  const auto y = DistributionModel::exponential(5.0);
  const auto r = verify_theorem1(x, y, 3, 2);
  if (r.overall != TheoremOutcome::Pass) {
    note("theorem report: %s", r.x_spec.c_str());
    return false;
  }
  const RecordLaw rx(x, 3, RecordKind::Upper), ry(y, 2, RecordKind::Upper);
  const auto grid = effective_grid(x, y);
  if (grid.size() < 2048) {
    note("grid has %zu points, need >= 2048", grid.size());
    return false;
  }
  std::vector<double> ratio;
  ratio.reserve(grid.size());
  for (double t : grid) ratio.push_back(rx.hazard(t) / ry.hazard(t));
  const auto mono = monotone_grid_test(ratio, Direction::Increasing, 1e-9);
  if (!mono.pass) note("ratio decreases at grid index %td", mono.first_violation);
  return mono.pass;
}

bool c5_theorem2_lomax() {
  const auto r = verify_theorem2(kLomaxX, kLomaxY, 3, 2);
  bool ok = r.overall == TheoremOutcome::Pass;
  if (!ok) note("theorem outcome not pass");
  const auto* sup = sup_check_of(r);
  if (!sup || !sup->boundary_equality) {
    note("boundary-equality flag missing");
    ok = false;
  }

  const RecordLaw rx(kLomaxX, 3, RecordKind::Upper), ry(kLomaxY, 2, RecordKind::Upper);
  const auto grid = effective_grid(kLomaxX, kLomaxY);
  std::vector<double> ratio;
  for (double t : grid) ratio.push_back(rx.hazard(t) / ry.hazard(t));
  if (!monotone_grid_test(ratio, Direction::Increasing, 1e-9).pass) {
    note("record hazard ratio not non-decreasing");
    ok = false;
  }

  for (double t : log_pts(0.01, 100.0, 400)) {
    const double L = std::log1p(t);
    const double closed = 27.0 * L * L / ((1.0 + t) * (2.0 + 6.0 * L + 9.0 * L * L));
    const double generic = rx.hazard(t);
    if (std::abs(generic - closed) > 1e-9 * closed) {
      note("record hazard mismatch at t=%.4g: %.12g vs %.12g", t, generic, closed);
      ok = false;
      break;
    }
  }
  return ok;
}

bool c6_theorem3_invweibull() {
  const auto r = verify_theorem3(kIwX, kIwY, 3, 2);
  bool ok = r.overall == TheoremOutcome::Pass;
  if (!ok) note("theorem outcome not pass");

  const RecordLaw x3(kIwX, 3, RecordKind::Lower), y2(kIwY, 2, RecordKind::Lower);
  for (double t : log_pts(0.05, 50.0, 400)) {
    const double t2 = t * t, t3 = t2 * t, t4 = t2 * t2;
    const double rx_closed = 64.0 / (t3 * (t4 + 4.0 * t2 + 8.0));
    const double ry_closed = 50.0 / (t3 * (t2 + 5.0));
    if (std::abs(x3.rev_hazard(t) - rx_closed) > 1e-9 * rx_closed ||
        std::abs(y2.rev_hazard(t) - ry_closed) > 1e-9 * ry_closed) {
      note("record rhr mismatch at t=%.4g", t);
      ok = false;
      break;
    }
  }

  const auto grid = effective_grid(kIwX, kIwY);
  std::vector<double> ratio;
  for (double t : grid) ratio.push_back(x3.rev_hazard(t) / y2.rev_hazard(t));
  if (!monotone_grid_test(ratio, Direction::Decreasing, 1e-9).pass) {
    note("record rhr ratio not non-increasing");
    ok = false;
  }
  return ok;
}

bool c7_theorem4_invweibull() {
  const auto r = verify_theorem4(kIw4X, kIw4Y, 3, 2);
  bool ok = r.overall == TheoremOutcome::Pass;
  if (!ok) note("theorem outcome not pass");

  const RecordLaw x3(kIw4X, 3, RecordKind::Lower), y2(kIw4Y, 2, RecordKind::Lower);
  const auto grid = effective_grid(kIw4X, kIw4Y);
  std::vector<double> ratio;
  for (double t : grid) ratio.push_back(x3.rev_hazard(t) / y2.rev_hazard(t));
  const auto mono = monotone_grid_test(ratio, Direction::Decreasing, 1e-9);
  if (!mono.pass) {
    note("record rhr ratio not non-increasing at index %td", mono.first_violation);
    ok = false;
  }
  return ok;
}

bool c8_kernel_properties() {
  const auto grid = log_pts(1e-8, 1e8, 2048);
  for (int n = 1; n <= 8; ++n) {
    std::vector<double> psis;
    psis.reserve(grid.size());
    for (double s : grid) {
      const double p = psi(n, s);
      if (p < 0.0) {
        note("psi_%d negative at s=%.3g", n, s);
        return false;
      }
      psis.push_back(p);
    }
    if (!monotone_grid_test(psis, Direction::Decreasing, 1e-9).pass) {
      note("psi_%d not monotone in s", n);
      return false;
    }
    for (double s : grid)
      if (xi(n, s) < 1.0) {
        note("xi_%d below one at s=%.3g", n, s);
        return false;
      }
  }
  for (int n = 1; n <= 8; ++n) {
    for (int m = n; m <= 8; ++m) {
      std::vector<double> ks, xr;
      ks.reserve(grid.size());
      xr.reserve(grid.size());
      for (double s : grid) {
        if (psi(m, s) < psi(n, s) - 1e-9 * std::max(psi(m, s), 1e-300)) {
          note("psi_%d < psi_%d at s=%.3g", m, n, s);
          return false;
        }
        ks.push_back(k_ratio(m, n, s));
        xr.push_back(xi(m, s) / xi(n, s));
      }
      if (!monotone_grid_test(ks, Direction::Increasing, 1e-9).pass) {
        note("K(%d,%d) not monotone", m, n);
        return false;
      }
      if (!monotone_grid_test(xr, Direction::Decreasing, 1e-9).pass) {
        note("xi_%d/xi_%d not monotone", m, n);
        return false;
      }
    }
  }
  return true;
}

bool c9_oracles() {
  bool ok = true;

  // closed-form equivalence of exponential upper records and Erlang
  for (int n : {1, 2, 3, 5}) {
    const RecordLaw rec(DistributionModel::exponential(3.0), n, RecordKind::Upper);
    const auto erl = DistributionModel::erlang(n, 3.0);
    for (double t : log_pts(1e-3, 20.0, 100)) {
      if (std::abs(rec.pdf(t) - erl.pdf(t)) > 1e-10 * erl.pdf(t) ||
          std::abs(rec.sf(t) - erl.sf(t)) > 1e-10 * erl.sf(t) ||
          std::abs(rec.hazard(t) - erl.hazard(t)) > 1e-10 * erl.hazard(t)) {
        note("record/Erlang mismatch at n=%d t=%.4g", n, t);
        ok = false;
        break;
      }
    }
  }

  // method equivalence
  const std::vector<DistributionModel> families = {
      DistributionModel::exponential(3.0),    DistributionModel::erlang(2, 1.5),
      DistributionModel::lomax(3.0, 1.0),     DistributionModel::weibull(1.4, 1.0),
      DistributionModel::inverse_weibull(2.0, 2.0)};
  for (std::size_t f = 0; f < families.size(); ++f) {
    for (int n = 2; n <= 4; ++n) {
      const int count = n == 4 ? 2000 : 8000;
      const RecordKind kind =
          families[f].family() == Family::InverseWeibull ? RecordKind::Lower : RecordKind::Upper;
      const std::uint64_t seed = 17000 + 100 * f + n;
      const auto a = sample_records(families[f], n, kind, count, seed,
                                    SampleMethod::GammaTransform);
      const auto b = sample_records(families[f], n, kind, count, seed + 50,
                                    SampleMethod::SequentialScan);
      const double d = ks_two_sample(a, b);
      const double crit = ks_critical_two_sample(count, count, 0.01);
      if (d >= crit) {
        note("two-method KS %.4f >= %.4f for family %zu n=%d", d, crit, f, n);
        ok = false;
      }
    }
  }

  // one-sample KS of large batches against the closed-form record laws
  struct Case {
    DistributionModel d;
    int n;
    RecordKind kind;
    std::uint64_t seed;
  };
  const std::vector<Case> cases = {
      {DistributionModel::lomax(3.0, 1.0), 3, RecordKind::Upper, 21},
      {DistributionModel::exponential(3.0), 2, RecordKind::Upper, 22},
      {DistributionModel::inverse_weibull(2.0, 2.0), 3, RecordKind::Lower, 23},
      {DistributionModel::weibull(1.4, 1.0), 2, RecordKind::Upper, 24},
  };
  for (const auto& c : cases) {
    const auto batch = sample_records(c.d, c.n, c.kind, 100000, c.seed);
    const double d = ks_distance(batch, RecordLaw(c.d, c.n, c.kind));
    const double crit = ks_critical_one_sample(batch.values.size(), 0.01);
    if (d >= crit) {
      note("one-sample KS %.5f >= %.5f for %s", d, crit, c.d.describe().c_str());
      ok = false;
    }
  }
  return ok;
}

bool c10_quadrature() {
  bool ok = true;
  const std::vector<DistributionModel> families = {
      DistributionModel::exponential(3.0),    DistributionModel::erlang(3, 3.0),
      DistributionModel::lomax(3.0, 1.0),     DistributionModel::weibull(1.4, 1.0),
      DistributionModel::inverse_weibull(2.0, 2.0)};

  for (const auto& d : families) {
    for (int n = 1; n <= 6; ++n) {
      for (auto kind : {RecordKind::Upper, RecordKind::Lower}) {
        const RecordLaw law(d, n, kind);
        const double total =
            integrate_adaptive([&](double t) { return law.pdf(t); }, 0.0, INFINITY, 1e-10);
        if (std::abs(total - 1.0) > 1e-8) {
          note("normalization off by %.3g for %s n=%d kind=%d", total - 1.0,
               d.describe().c_str(), n, kind == RecordKind::Upper ? 0 : 1);
          ok = false;
        }
      }
    }
  }

  // closed-form tails vs quadrature of the densities at 100 checkpoints
  const std::vector<RecordLaw> laws = {
      RecordLaw(DistributionModel::lomax(3.0, 1.0), 3, RecordKind::Upper),
      RecordLaw(DistributionModel::exponential(3.0), 2, RecordKind::Upper),
      RecordLaw(DistributionModel::inverse_weibull(2.0, 2.0), 3, RecordKind::Lower),
      RecordLaw(DistributionModel::weibull(1.4, 1.0), 2, RecordKind::Lower),
  };
  for (const auto& law : laws) {
    const auto checkpoints = effective_grid(law.base(), GridSpec::log_spaced(5e-2, 50.0, 25));
    for (double t : checkpoints) {
      if (law.kind() == RecordKind::Upper) {
        const double mass =
            integrate_adaptive([&](double u) { return law.pdf(u); }, t, INFINITY, 1e-10);
        if (std::abs(mass - law.sf(t)) > 1e-8) {
          note("sf form vs quadrature differs by %.3g at t=%.3g", mass - law.sf(t), t);
          ok = false;
        }
      } else {
        const double mass =
            integrate_adaptive([&](double u) { return law.pdf(u); }, 0.0, t, 1e-10);
        if (std::abs(mass - law.cdf(t)) > 1e-8) {
          note("cdf form vs quadrature differs by %.3g at t=%.3g", mass - law.cdf(t), t);
          ok = false;
        }
      }
    }
  }
  return ok;
}

}  // namespace

int main() {
  criterion(1, "sup psi_2(u)/psi_3(u^1.5) = 1.125 at the u->0+ boundary", c1_upper_sup);
  criterion(2, "sup psi_2(sqrt(u))/psi_3(u) = 2", c2_lower_sup);
  criterion(3, "hazard and rhr ratio limits for the three worked pairs", c3_limits);
  criterion(4, "records of exponential pairs: hypothesis chain and rising ratio", c4_theorem1_erlang);
  criterion(5, "Lomax pair: boundary-equality sup condition and record hazard form", c5_theorem2_lomax);
  criterion(6, "inverse-Weibull pair: lower-record rhr forms and falling ratio", c6_theorem3_invweibull);
  criterion(7, "shape-4 inverse-Weibull pair: sup condition via generic composition", c7_theorem4_invweibull);
  criterion(8, "kernel function properties for 1 <= n <= m <= 8", c8_kernel_properties);
  criterion(9, "Monte Carlo and closed-form oracle equivalence", c9_oracles);
  criterion(10, "quadrature normalization and tail-form consistency", c10_quadrature);

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}

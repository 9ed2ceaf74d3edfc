#include "record_order/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "record_order/errors.hpp"
#include "record_order/grid.hpp"

namespace record_order {

std::vector<double> GridSpec::points() const {
  if (count < 2) throw std::invalid_argument("GridSpec: count must be >= 2");
  if (!(lo < hi)) throw std::invalid_argument("GridSpec: requires lo < hi");
  if (spacing == GridSpacing::Log && !(lo > 0.0))
    throw std::invalid_argument("GridSpec: log spacing requires lo > 0");
  std::vector<double> pts(count);
  if (spacing == GridSpacing::Log) {
    const double step = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) pts[i] = lo * std::exp(i * step);
  } else {
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) pts[i] = lo + i * step;
  }
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1]; the embedded Gauss
// rule sits on the odd-index abscissae.
constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                               0.417959183673469};

struct Panel {
  double a, b;
  double integral;
  double error;
  int depth;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, int depth) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = kKronrodW[7] * f(mid);
  double gauss = kGaussW[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const double fsum = f(mid - half * kKronrodX[i]) + f(mid + half * kKronrodX[i]);
    kronrod += kKronrodW[i] * fsum;
    if (i % 2 == 1) gauss += kGaussW[i / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.integral = kronrod * half;
  p.error = std::abs((kronrod - gauss) * half);
  p.depth = depth;
  if (!std::isfinite(p.integral))
    throw QuadratureNonConvergence("integrate_adaptive: non-finite integrand");
  return p;
}

constexpr int kMaxDepth = 60;
constexpr int kMaxSplits = 4000;

double adaptive_core(const std::function<double(double)>& f, double lo, double hi,
                     double rel_tol) {
  std::priority_queue<Panel> queue;
  double total = 0.0, total_error = 0.0;
  const int seeds = 8;
  for (int i = 0; i < seeds; ++i) {
    const Panel p = evaluate_panel(f, lo + (hi - lo) * i / seeds,
                                   lo + (hi - lo) * (i + 1) / seeds, 0);
    total += p.integral;
    total_error += p.error;
    queue.push(p);
  }
  auto converged = [&] { return total_error <= rel_tol * std::abs(total) + 1e-300; };
  for (int split = 0; split < kMaxSplits && !converged(); ++split) {
    const Panel worst = queue.top();
    if (worst.depth >= kMaxDepth || worst.error == 0.0) break;
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1);
    const Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1);
    total += left.integral + right.integral - worst.integral;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }
  if (!converged())
    throw QuadratureNonConvergence("integrate_adaptive: tolerance not reached");
  return total;
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double rel_tol) {
  if (std::isnan(lo) || std::isnan(hi))
    throw std::invalid_argument("integrate_adaptive: NaN bound");
  if (lo == hi) return 0.0;
  if (lo > hi) return -integrate_adaptive(f, hi, lo, rel_tol);

  if (std::isinf(hi)) {
    // Fold [lo, inf) onto [x0, 1) with t = x/(1-x).
    const double x0 = lo / (1.0 + lo);
    auto folded = [&f](double x) {
      const double om = 1.0 - x;
      if (om <= 0.0) return 0.0;
      const double v = f(x / om) / (om * om);
      return std::isfinite(v) ? v : 0.0;  // mapped tail past double range
    };
    return adaptive_core(folded, x0, 1.0, rel_tol);
  }
  return adaptive_core(f, lo, hi, rel_tol);
}

MaxResult golden_section_max(const std::function<double(double)>& f, double a, double b,
                             double c, double rel_tol) {
  if (!(a < b && b < c)) throw std::invalid_argument("golden_section_max: need a < b < c");
  double fa = f(a), fb = f(b), fc = f(c);
  if (!(fb >= fa && fb >= fc))
    throw std::invalid_argument("golden_section_max: f(b) must dominate the bracket ends");

  constexpr double inv_phi = 0.6180339887498949;  // 1/phi
  double lo = a, hi = c, x1 = b, f1 = fb;
  // Probe on the longer side of the current interior point.
  for (int iter = 0; iter < 400; ++iter) {
    if ((hi - lo) <= rel_tol * (std::abs(lo) + std::abs(hi)) * 0.5) break;
    double x2;
    const bool right = (hi - x1) > (x1 - lo);
    x2 = right ? hi - inv_phi * (hi - x1) : lo + inv_phi * (x1 - lo);
    if (x2 == x1) break;
    const double f2 = f(x2);
    if (f2 > f1) {
      (x2 > x1 ? lo : hi) = x1;
      x1 = x2;
      f1 = f2;
    } else {
      (x2 > x1 ? hi : lo) = x2;
    }
  }
  return {x1, f1};
}

LimitEstimate extrapolate_limit(const std::vector<double>& iterates) {
  if (iterates.size() < 5)
    throw std::invalid_argument("extrapolate_limit: need at least 5 iterates");

  LimitEstimate out;
  std::vector<double> cur = iterates;
  double prev_best = cur.back();
  double prev_residual = std::numeric_limits<double>::infinity();
  out.value = prev_best;

  for (int sweep = 0; sweep < 5 && cur.size() >= 3; ++sweep) {
    std::vector<double> next;
    next.reserve(cur.size() - 2);
    for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
      const double d1 = cur[i + 1] - cur[i];
      const double d2 = cur[i + 2] - cur[i + 1];
      const double denom = d2 - d1;
      const double scale = std::abs(cur[i + 2]) + std::abs(cur[i + 1]) + std::abs(cur[i]);
      if (std::abs(denom) <= 1e-15 * scale || denom == 0.0) {
        next.push_back(cur[i + 2]);
      } else {
        next.push_back(cur[i + 2] - d2 * d2 / denom);
      }
    }
    const double best = next.back();
    const double residual = std::abs(best - prev_best);
    out.sweep_best.push_back(best);
    if (!std::isfinite(best)) break;
    if (residual > 4.0 * prev_residual && residual > 1e-12 * std::abs(best))
      throw OscillatingSequence("extrapolate_limit: residual grew under acceleration");
    out.value = best;
    out.residual = residual;
    prev_best = best;
    prev_residual = std::max(residual, 1e-300);
    cur = std::move(next);
    if (residual <= 1e-14 * std::abs(best)) break;
  }
  return out;
}

MonotoneResult monotone_grid_test(const std::vector<double>& values, Direction direction,
                                  double slack) {
  if (values.size() < 2)
    throw std::invalid_argument("monotone_grid_test: need at least 2 values");
  MonotoneResult res;
  res.margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    double step = values[i + 1] - values[i];
    if (direction == Direction::Decreasing) step = -step;
    const double scale = std::max({std::abs(values[i]), std::abs(values[i + 1]), 1e-300});
    const double rel = step / scale;
    if (rel < res.margin) res.margin = rel;
    if (rel < -slack && res.pass) {
      res.pass = false;
      res.first_violation = static_cast<std::ptrdiff_t>(i + 1);
    }
  }
  return res;
}

}  // namespace record_order

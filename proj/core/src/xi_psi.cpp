#include "record_order/xi_psi.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace record_order {

namespace {

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

const std::array<double, kMaxRecordIndex + 1>& factorials() {
  static const auto table = [] {
    std::array<double, kMaxRecordIndex + 1> f{};
    f[0] = 1.0;
    for (int i = 1; i <= kMaxRecordIndex; ++i) f[i] = f[i - 1] * static_cast<double>(i);
    return f;
  }();
  return table;
}

void require_index(int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": index must be >= 1");
  if (n > kMaxRecordIndex)
    throw std::invalid_argument(std::string(who) + ": index exceeds factorial range (170)");
}

void require_s(double s, const char* who) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::invalid_argument(std::string(who) + ": s must be positive and finite");
}

// P(s)  = sum_{i=0}^{n-1} s^i / i!   and   D(s) = sum_{i=0}^{n-1} (n-1-i) s^i / i!,
// ascending powers; safe for s < 1 (all powers bounded by 1).
void plain_sums(int n, double s, double& p, double& d) {
  const auto& fact = factorials();
  KahanSum ps, ds;
  double power = 1.0;
  for (int i = 0; i < n; ++i) {
    const double term = power / fact[i];
    ps.add(term);
    ds.add(static_cast<double>(n - 1 - i) * term);
    power *= s;
  }
  p = ps.sum;
  d = ds.sum;
}

// Same sums divided through by s^(n-1): powers run over s^(i-n+1) <= 1 for
// s >= 1, so nothing overflows no matter how large s gets.
void scaled_sums(int n, double s, double& p, double& d) {
  const auto& fact = factorials();
  KahanSum ps, ds;
  double term = 1.0 / fact[n - 1];  // i = n-1: s^0 / (n-1)!
  for (int i = n - 1; i >= 0; --i) {
    ps.add(term);
    ds.add(static_cast<double>(n - 1 - i) * term);
    term *= static_cast<double>(i) / s;
  }
  p = ps.sum;
  d = ds.sum;
}

}  // namespace

double xi(int n, double s) {
  require_index(n, "xi");
  require_s(s, "xi");
  if (n == 1) return 1.0;
  double p, d;
  if (s >= 1.0) {
    scaled_sums(n, s, p, d);
    return factorials()[n - 1] * p;
  }
  plain_sums(n, s, p, d);
  return factorials()[n - 1] * p / std::pow(s, n - 1);
}

double psi(int n, double s) {
  require_index(n, "psi");
  require_s(s, "psi");
  if (n == 1) return 0.0;
  double p, d;
  if (s >= 1.0)
    scaled_sums(n, s, p, d);
  else
    plain_sums(n, s, p, d);
  return d / (s * p);
}

double k_ratio(int m, int n, double s) {
  require_index(n, "k_ratio");
  require_index(m, "k_ratio");
  if (m < n) throw std::invalid_argument("k_ratio: requires m >= n");
  require_s(s, "k_ratio");
  if (m == n) return 1.0;
  double pn, pm, unused;
  if (s >= 1.0) {
    scaled_sums(n, s, pn, unused);
    scaled_sums(m, s, pm, unused);
    return pn / pm;
  }
  plain_sums(n, s, pn, unused);
  plain_sums(m, s, pm, unused);
  return std::pow(s, m - n) * pn / pm;
}

double log_trunc_exp_sum(int n, double s) {
  require_index(n, "log_trunc_exp_sum");
  if (!(s >= 0.0) || !std::isfinite(s))
    throw std::invalid_argument("log_trunc_exp_sum: s must be non-negative and finite");
  if (n == 1 || s == 0.0) return 0.0;
  if (s <= 600.0) {
    const auto& fact = factorials();
    KahanSum ps;
    double power = 1.0;
    for (int i = 0; i < n; ++i) {
      ps.add(power / fact[i]);
      power *= s;
    }
    return std::log(ps.sum);
  }
  // log-sum-exp over i*ln(s) - ln(i!)
  const double ln_s = std::log(s);
  double peak = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i)
    peak = std::max(peak, static_cast<double>(i) * ln_s - std::lgamma(i + 1.0));
  KahanSum acc;
  for (int i = 0; i < n; ++i)
    acc.add(std::exp(static_cast<double>(i) * ln_s - std::lgamma(i + 1.0) - peak));
  return peak + std::log(acc.sum);
}

}  // namespace record_order

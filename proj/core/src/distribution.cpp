#include "record_order/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "record_order/errors.hpp"
#include "record_order/xi_psi.hpp"

namespace record_order {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument(std::string("parameter '") + name + "' must be positive and finite");
}

void require_time(double t, const char* who) {
  if (std::isnan(t) || std::isinf(t))
    throw std::invalid_argument(std::string(who) + ": t must be finite");
  if (t < 0.0) throw std::invalid_argument(std::string(who) + ": t must be non-negative");
}

std::string format_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ln(1 - e^{-x}) for x > 0, accurate at both ends (branch at ln 2).
double log1mexp(double x) {
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  return x < 0.6931471805599453 ? std::log(-std::expm1(-x)) : std::log1p(-std::exp(-x));
}

// log of sum_{i=shape}^{inf} x^i / i!, the lower tail of the exponential
// series. Dominates the Erlang cdf for x <= shape; converges geometrically
// once i exceeds x.
double erlang_log_lower_tail(int shape, double x) {
  if (x == 0.0) return kNegInf;
  const double ln_x = std::log(x);
  const double first = shape * ln_x - std::lgamma(shape + 1.0);
  double scaled = 1.0;  // term_i / exp(first)
  double total = 1.0;
  double log_term = 0.0;
  for (int j = 1; j < 600; ++j) {
    log_term += ln_x - std::log(static_cast<double>(shape + j));
    scaled = std::exp(log_term);
    total += scaled;
    if (scaled < total * 1e-18 && shape + j > x) break;
  }
  return first + std::log(total);
}

}  // namespace

DistributionModel::DistributionModel(Family f, double a, double b, int ishape)
    : family_(f), a_(a), b_(b), ishape_(ishape) {}

DistributionModel DistributionModel::exponential(double rate) {
  require_positive(rate, "rate");
  return DistributionModel(Family::Exponential, rate, 0.0, 0);
}

DistributionModel DistributionModel::erlang(int shape, double rate) {
  if (shape < 1 || shape > kMaxRecordIndex)
    throw std::invalid_argument("parameter 'shape' must be an integer in [1, 170]");
  require_positive(rate, "rate");
  return DistributionModel(Family::Erlang, rate, 0.0, shape);
}

DistributionModel DistributionModel::lomax(double shape, double scale) {
  require_positive(shape, "shape");
  require_positive(scale, "scale");
  return DistributionModel(Family::Lomax, shape, scale, 0);
}

DistributionModel DistributionModel::weibull(double shape, double scale) {
  require_positive(shape, "shape");
  require_positive(scale, "scale");
  return DistributionModel(Family::Weibull, shape, scale, 0);
}

DistributionModel DistributionModel::inverse_weibull(double shape, double scale) {
  require_positive(shape, "shape");
  require_positive(scale, "scale");
  return DistributionModel(Family::InverseWeibull, shape, scale, 0);
}

double DistributionModel::log_sf(double t) const {
  require_time(t, "log_sf");
  switch (family_) {
    case Family::Exponential:
      return -a_ * t;
    case Family::Erlang: {
      const double x = a_ * t;
      if (x <= ishape_) {
        const double lc = -x + erlang_log_lower_tail(ishape_, x);
        return std::log1p(-std::exp(lc));
      }
      return -x + log_trunc_exp_sum(ishape_, x);
    }
    case Family::Lomax:
      return -a_ * std::log1p(t / b_);
    case Family::Weibull:
      return -std::pow(t / b_, a_);
    case Family::InverseWeibull:
      // sf = 1 - exp(-(scale/t)^shape)
      return t == 0.0 ? 0.0 : log1mexp(std::pow(b_ / t, a_));
  }
  return kNegInf;
}

double DistributionModel::log_cdf(double t) const {
  require_time(t, "log_cdf");
  switch (family_) {
    case Family::Exponential:
      return log1mexp(a_ * t);
    case Family::Erlang: {
      const double x = a_ * t;
      if (x <= ishape_) return -x + erlang_log_lower_tail(ishape_, x);
      return std::log1p(-sf(t));
    }
    case Family::Lomax:
      return log1mexp(a_ * std::log1p(t / b_));
    case Family::Weibull:
      return log1mexp(std::pow(t / b_, a_));
    case Family::InverseWeibull:
      if (t == 0.0) return kNegInf;
      return -std::pow(b_ / t, a_);
  }
  return kNegInf;
}

// sf and cdf are computed from whichever log form is closed form for the
// family (exp/expm1 of it), never by round-tripping through the other side.
double DistributionModel::sf(double t) const {
  switch (family_) {
    case Family::InverseWeibull:
      return -std::expm1(log_cdf(t));
    case Family::Erlang:
      if (a_ * t <= ishape_) return -std::expm1(log_cdf(t));
      return std::exp(log_sf(t));
    default:
      return std::exp(log_sf(t));
  }
}

double DistributionModel::cdf(double t) const {
  switch (family_) {
    case Family::InverseWeibull:
      return std::exp(log_cdf(t));
    case Family::Erlang:
      if (a_ * t <= ishape_) return std::exp(log_cdf(t));
      return -std::expm1(log_sf(t));
    default:
      return -std::expm1(log_sf(t));
  }
}

double DistributionModel::log_pdf(double t) const {
  require_time(t, "log_pdf");
  switch (family_) {
    case Family::Exponential:
      return std::log(a_) - a_ * t;
    case Family::Erlang: {
      if (t == 0.0) return ishape_ == 1 ? std::log(a_) : kNegInf;
      const double x = a_ * t;
      return std::log(a_) + (ishape_ - 1) * std::log(x) - x - std::lgamma(ishape_);
    }
    case Family::Lomax:
      return std::log(a_ / b_) - (a_ + 1.0) * std::log1p(t / b_);
    case Family::Weibull: {
      if (t == 0.0) {
        if (a_ < 1.0) return std::numeric_limits<double>::infinity();
        return a_ == 1.0 ? -std::log(b_) : kNegInf;
      }
      const double z = t / b_;
      return std::log(a_ / b_) + (a_ - 1.0) * std::log(z) - std::pow(z, a_);
    }
    case Family::InverseWeibull: {
      if (t == 0.0) return kNegInf;
      return std::log(a_) + a_ * std::log(b_) - (a_ + 1.0) * std::log(t) - std::pow(b_ / t, a_);
    }
  }
  return kNegInf;
}

double DistributionModel::pdf(double t) const { return std::exp(log_pdf(t)); }

double DistributionModel::hazard(double t) const {
  require_time(t, "hazard");
  switch (family_) {
    case Family::Exponential:
      return a_;
    case Family::Erlang: {
      const double ls = log_sf(t);
      if (ls == kNegInf) throw SupportExhausted("hazard: Erlang sf underflowed");
      return std::exp(log_pdf(t) - ls);
    }
    case Family::Lomax:
      return a_ / (b_ + t);
    case Family::Weibull:
      if (t == 0.0) return pdf(0.0);  // shape-dependent limit: 0, rate, or +inf
      return (a_ / b_) * std::pow(t / b_, a_ - 1.0);
    case Family::InverseWeibull: {
      if (t == 0.0) return 0.0;
      const double lc = log_cdf(t);
      const double sf_v = -std::expm1(lc);
      if (sf_v == 0.0) throw SupportExhausted("hazard: inverse-Weibull sf underflowed");
      return rev_hazard(t) * std::exp(lc) / sf_v;
    }
  }
  return 0.0;
}

double DistributionModel::rev_hazard(double t) const {
  require_time(t, "rev_hazard");
  if (t == 0.0) throw SupportExhausted("rev_hazard: cdf vanishes at t = 0");
  switch (family_) {
    case Family::Exponential: {
      const double e = std::expm1(a_ * t);
      if (std::isinf(e)) return a_ * std::exp(-a_ * t) / 1.0;
      return a_ / e;
    }
    case Family::Erlang: {
      const double lc = log_cdf(t);
      if (lc == kNegInf) throw SupportExhausted("rev_hazard: Erlang cdf underflowed");
      return std::exp(log_pdf(t) - lc);
    }
    case Family::Lomax: {
      const double one_minus_q = -std::expm1(-a_ * std::log1p(t / b_));
      if (one_minus_q == 0.0) throw SupportExhausted("rev_hazard: Lomax cdf underflowed");
      return hazard(t) * std::exp(log_sf(t)) / one_minus_q;
    }
    case Family::Weibull: {
      const double one_minus_q = -std::expm1(-std::pow(t / b_, a_));
      if (one_minus_q == 0.0) throw SupportExhausted("rev_hazard: Weibull cdf underflowed");
      return hazard(t) * std::exp(log_sf(t)) / one_minus_q;
    }
    case Family::InverseWeibull:
      // pdf/cdf collapses to shape * scale^shape / t^(shape+1)
      return (a_ / t) * std::pow(b_ / t, a_);
  }
  return 0.0;
}

double DistributionModel::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("quantile: p must lie in (0,1)");
  if (p > 0.5) return quantile_from_log_sf(std::log1p(-p));
  return quantile_from_log_cdf(std::log(p));
}

double DistributionModel::quantile_from_log_sf(double ls) const {
  if (!(ls <= 0.0)) throw std::invalid_argument("quantile_from_log_sf: log sf must be <= 0");
  switch (family_) {
    case Family::Exponential:
      return -ls / a_;
    case Family::Erlang:
      break;  // bisection below
    case Family::Lomax:
      return b_ * std::expm1(-ls / a_);
    case Family::Weibull:
      return b_ * std::pow(-ls, 1.0 / a_);
    case Family::InverseWeibull:
      // cdf = 1 - e^ls
      return quantile_from_log_cdf(log1mexp(-ls));
  }
  // Erlang: log_sf is continuous and strictly decreasing; bracket then bisect.
  double hi = static_cast<double>(ishape_) / a_ + 1.0;
  while (log_sf(hi) > ls) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_sf(mid) > ls ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double DistributionModel::quantile_from_log_cdf(double lc) const {
  if (!(lc <= 0.0)) throw std::invalid_argument("quantile_from_log_cdf: log cdf must be <= 0");
  switch (family_) {
    case Family::Exponential:
      return -log1mexp(-lc) / a_;
    case Family::Erlang:
      break;  // bisection below
    case Family::Lomax:
    case Family::Weibull:
      return quantile_from_log_sf(log1mexp(-lc));
    case Family::InverseWeibull:
      return b_ * std::pow(-lc, -1.0 / a_);
  }
  double hi = static_cast<double>(ishape_) / a_ + 1.0;
  while (log_cdf(hi) < lc) hi *= 2.0;
  double lo = 0.0;
  for (int i = 0; i < 200 && (hi - lo) > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (log_cdf(mid) < lc ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string DistributionModel::describe() const {
  switch (family_) {
    case Family::Exponential:
      return "exp:rate=" + format_param(a_);
    case Family::Erlang:
      return "erlang:shape=" + std::to_string(ishape_) + ",rate=" + format_param(a_);
    case Family::Lomax:
      return "lomax:shape=" + format_param(a_) + ",scale=" + format_param(b_);
    case Family::Weibull:
      return "weibull:shape=" + format_param(a_) + ",scale=" + format_param(b_);
    case Family::InverseWeibull:
      return "invweibull:shape=" + format_param(a_) + ",scale=" + format_param(b_);
  }
  return {};
}

}  // namespace record_order

#include "cirspread/rng.hpp"

#include <cmath>
#include <numbers>

#include "cirspread/errors.hpp"

namespace cirspread {

namespace {

// Acklam's rational approximation regions.
constexpr double kLow = 0.02425;

double acklam(double p) {
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  if (p < kLow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= 1.0 - kLow) {
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r +
            a[5]) *
           q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  const double q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
           c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw ValidationError("inverse_normal_cdf: p must lie in (0,1)");
  double x = acklam(p);
  // One Halley step against the exact CDF brings the approximation to
  // near machine precision.
  const double e = 0.5 * std::erfc(-x / std::numbers::sqrt2) - p;
  const double u =
      e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double CounterRng::next_normal() { return inverse_normal_cdf(next_unit()); }

double sample_gamma(CounterRng& rng, double shape) {
  if (!(shape > 0.0)) throw ValidationError("sample_gamma: shape must be > 0");
  if (shape < 1.0) {
    const double u = rng.next_unit();
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang. The acceptance test is evaluated through
  // 3 log1p(cx) - (v^3 - 1), which stays accurate for very large shapes
  // where the textbook d(1 - v + ln v) form cancels catastrophically.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double cx;
    do {
      x = rng.next_normal();
      cx = c * x;
    } while (cx <= -1.0);
    const double w1 = cx * (3.0 + cx * (3.0 + cx));  // v^3 - 1
    const double u = rng.next_unit();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * (1.0 + w1);
    if (std::log(u) < 0.5 * x2 + d * (3.0 * std::log1p(cx) - w1))
      return d * (1.0 + w1);
  }
}

namespace {

// Hormann's PTRS transformed-rejection sampler, exact for mean >= 10.
std::uint64_t poisson_ptrs(CounterRng& rng, double mean) {
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = rng.next_unit() - 0.5;
    const double v = rng.next_unit();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0))
      return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace

std::uint64_t sample_poisson(CounterRng& rng, double mean) {
  if (!(mean >= 0.0)) throw ValidationError("sample_poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    const double limit = std::exp(-mean);
    double prod = 1.0;
    std::uint64_t k = 0;
    for (;;) {
      prod *= rng.next_unit();
      if (prod <= limit) return k;
      ++k;
    }
  }
  return poisson_ptrs(rng, mean);
}

}  // namespace cirspread

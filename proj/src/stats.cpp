#include "cirspread/stats.hpp"

#include <algorithm>
#include <cmath>

#include "cirspread/errors.hpp"

namespace cirspread {

double sample_mean(std::span<const double> x) {
  if (x.empty()) throw ValidationError("sample_mean: empty sample");
  double sum = 0.0;
  for (double v : x) sum += v;
  return sum / static_cast<double>(x.size());
}

double sample_variance(std::span<const double> x) {
  if (x.size() < 2) throw ValidationError("sample_variance: need >= 2 points");
  const double m = sample_mean(x);
  double ss = 0.0;
  for (double v : x) {
    const double d = v - m;
    ss += d * d;
  }
  return ss / static_cast<double>(x.size() - 1);
}

double sample_std(std::span<const double> x) {
  return std::sqrt(sample_variance(x));
}

double quantile_sorted(std::span<const double> sorted, double level) {
  if (sorted.empty()) throw ValidationError("quantile: empty sample");
  if (!(level > 0.0 && level < 1.0))
    throw ValidationError("quantile: level must lie in (0,1)");
  const std::size_t n = sorted.size();
  if (n == 1) return sorted[0];
  const double h = level * static_cast<double>(n - 1);
  const std::size_t lo = static_cast<std::size_t>(h);
  const double frac = h - static_cast<double>(lo);
  if (lo + 1 >= n) return sorted[n - 1];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

std::vector<double> quantiles_sorted(std::span<const double> sorted,
                                     std::span<const double> levels) {
  std::vector<double> out;
  out.reserve(levels.size());
  for (double p : levels) out.push_back(quantile_sorted(sorted, p));
  return out;
}

Histogram histogram(std::span<const double> values, int bins) {
  if (values.empty()) throw ValidationError("histogram: empty sample");
  if (bins < 1) throw ValidationError("histogram: bins must be >= 1");
  const auto [mn_it, mx_it] = std::minmax_element(values.begin(), values.end());
  double lo = *mn_it;
  double hi = *mx_it;
  if (hi == lo) hi = lo + 1e-12;  // constant sample: token-width bin
  const double width = (hi - lo) / bins;

  Histogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.edges[i] = lo + width * i;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double v : values) {
    auto idx = static_cast<std::size_t>((v - lo) / width);
    if (idx >= static_cast<std::size_t>(bins)) idx = bins - 1;
    ++h.counts[idx];
  }
  return h;
}

}  // namespace cirspread

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cirspread {

double sample_mean(std::span<const double> x);

// Sample standard deviation, n-1 denominator. Requires size >= 2.
double sample_std(std::span<const double> x);

double sample_variance(std::span<const double> x);

// Type-7 quantile (linear interpolation of order statistics) on an
// ascending-sorted sample. level must lie in (0,1).
double quantile_sorted(std::span<const double> sorted, double level);

std::vector<double> quantiles_sorted(std::span<const double> sorted,
                                     std::span<const double> levels);

struct Histogram {
  std::vector<double> edges;    // bins+1 ascending edges
  std::vector<std::uint64_t> counts;
};

// Equal-width bins over [min, max] of the data; a degenerate (constant)
// sample gets one token-width bin.
Histogram histogram(std::span<const double> values, int bins);

}  // namespace cirspread

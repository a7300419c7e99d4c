#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cirspread/cir.hpp"

namespace cirspread {

// Weekly time series of bootstrapped market intensities, one series per
// horizon. Times are year-fractions; spacing must be weekly within a
// +/- 2 day tolerance.
struct IntensitySeries {
  double maturity = 0.0;          // horizon in years
  std::vector<double> times;      // strictly increasing
  std::vector<double> values;     // intensities, >= 0
};

struct IntensityHistory {
  std::vector<IntensitySeries> series;
};

void validate(const IntensityHistory& history);

struct VolPoint {
  double maturity;
  double vol;  // same units as the intensity levels
};

struct VolTermStructure {
  std::vector<VolPoint> points;
};

enum class Representative { kMax, kMedian, kMean };

Representative representative_from_string(const std::string& name);
std::string to_string(Representative r);

struct ParameterBounds {
  double kappa_lo = 1e-3, kappa_hi = 5.0;
  double theta_lo = 1e-5, theta_hi = 0.5;
  double sigma_lo = 1e-4, sigma_hi = 1.0;
  double y0_lo = 1e-5, y0_hi = 0.5;
};

struct CalibrationConfig {
  int window_weeks = 51;
  Representative representative = Representative::kMax;
  ParameterBounds bounds;
  int multistarts = 16;
  int max_iterations = 4000;   // objective evaluations per start
  double tolerance = 1e-14;    // simplex f-spread stop
  std::uint64_t seed = 20240101;
  int workers = 0;             // 0 = hardware concurrency
};

struct CalibrationResult {
  CirParams params;
  double ssre = 0.0;
  VolTermStructure target;
  VolTermStructure fitted;
  // diagnostics
  std::uint64_t evaluations = 0;
  int starts_used = 0;
  int best_start = -1;
  std::vector<double> start_ssre;  // best value reached from each start
};

// Rolling sample standard deviation of intensity levels: window w covers
// weeks [w-window+1, w]. The windowed level std IS the volatility (no
// sqrt-of-frequency scaling).
std::vector<double> rolling_volatility(const IntensitySeries& series,
                                       int window_weeks);

struct VolSeries {
  double maturity;
  std::vector<double> vols;
};

std::vector<VolSeries> rolling_volatility(const IntensityHistory& history,
                                          int window_weeks);

double representative_vol(const std::vector<double>& vol_series,
                          Representative statistic);

VolTermStructure representative_vols(const std::vector<VolSeries>& series,
                                     Representative statistic);

// Model vol term structure sqrt(Var[lambda(T_i)]).
std::vector<double> model_vols(const CirParams& params,
                               const std::vector<double>& maturities);

// Sum over maturities of squared relative errors between target and model
// vols. Every target vol must be strictly positive.
double ssre(const CirParams& params, const VolTermStructure& target);

// Multistart Nelder-Mead over log-scaled parameters inside the bound box;
// Feller violations and bound escapes are penalised at +1e6 so the search
// stays in the feasible region. Deterministic for a given config.
CalibrationResult calibrate(const VolTermStructure& target,
                            const CalibrationConfig& config);

}  // namespace cirspread

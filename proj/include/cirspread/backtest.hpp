#pragma once

#include <cstdint>
#include <vector>

#include "cirspread/cir.hpp"
#include "cirspread/curves.hpp"

namespace cirspread {

struct BacktestConfig {
  int horizon_weeks = 200;
  double tenor = 5.0;
  std::vector<double> levels = {0.01, 0.10, 0.20, 0.30,
                                0.70, 0.80, 0.90, 0.99};
  int n_paths = 20000;
  std::uint64_t seed = 0;
  int workers = 0;
  double gap_tolerance = 0.05;  // max fraction of missing history weeks
};

void validate(const BacktestConfig& config);

// One observed spread at a week index relative to the start date.
struct ObservedWeek {
  int week;       // 1..horizon (week 0 is the fitted start, not counted)
  double spread;  // decimal per annum
};

struct CoverageLevel {
  double level;
  int below = 0;       // observations strictly below the band
  double fraction = 0.0;
};

struct CoverageReport {
  std::vector<CoverageLevel> coverage;   // ascending levels
  std::vector<int> exceedance_weeks;     // observations above the top band
  bool bands_nested = false;
  int weeks_counted = 0;
  std::vector<int> skipped_weeks;        // expected but missing, within tolerance

  // Plot-ready panel: per week the simulated bands, plus the observation
  // where present (NaN otherwise).
  std::vector<double> band_levels;
  std::vector<std::vector<double>> bands;  // [week][level]
  std::vector<double> observed;            // [week], NaN when missing
};

// Replays the model from the start-date market state: fits the initial
// survival curve from the start spread curve, simulates the configured
// tenor's spread weekly, and measures how the per-week quantile bands
// cover the observed series. Coverage counts weeks 1..horizon (week 0 is
// degenerate: every band equals the observation).
CoverageReport run_backtest(const std::vector<ObservedWeek>& history,
                            const SpreadCurve& start_curve, double delta,
                            const CirParams& params,
                            const BacktestConfig& config);

struct CoverageStats {
  // counts[i] = observations in (band_i, band_{i+1}], with virtual
  // -inf/+inf outer edges; first and last entries are the exceedances
  // below the bottom and above the top band.
  std::vector<int> band_pair_counts;
  int below_bottom = 0;
  int above_top = 0;
  int max_violation_week = -1;  // -1 when everything sits inside the bands
  double max_violation = 0.0;
};

CoverageStats coverage_stats(const CoverageReport& report);

}  // namespace cirspread

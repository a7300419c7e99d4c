#pragma once

#include <cstdint>
#include <vector>

#include "cirspread/cir.hpp"
#include "cirspread/curves.hpp"
#include "cirspread/rng.hpp"

namespace cirspread {

inline constexpr double kWeek = 1.0 / 52.0;

struct SimulationConfig {
  int n_paths = 20000;
  int horizon_weeks = 104;
  std::vector<double> maturities = {1.0, 3.0, 5.0, 7.0, 10.0};
  std::uint64_t seed = 0;
  int workers = 0;      // 0 = hardware concurrency
  // Stream id offset; held-out paths use a disjoint purpose so they never
  // collide with the main ensemble drawn under the same seed.
  std::uint64_t stream_purpose = 0;
};

void validate(const SimulationConfig& config);

// Exact conditional law of y(t) given y(s), t-s = dt:
// 2c y(t) ~ noncentral chi-square with dof degrees of freedom and
// noncentrality 2w.
struct CirTransition {
  double c;
  double w;
  double q;
  double dof;            // 2q + 2
  double noncentrality;  // 2w
};

CirTransition cir_transition(const CirParams& params, double y_s, double dt);

double cir_transition_mean(const CirParams& params, double y_s, double dt);
double cir_transition_variance(const CirParams& params, double y_s, double dt);

// One exact transition step. Composition sampling: N ~ Poisson(w),
// y_t = Gamma(q+1+N)/c; above noncentrality 1e7 the equivalent
// normal-shift form is used instead (see ledger in the repo docs).
double cir_transition_sample(double y_s, double dt, const CirParams& params,
                             CounterRng& rng);

// Factor paths on the weekly grid, path-major storage: y(path, week) with
// week in [0, horizon]. Path i consumes stream i regardless of worker
// count, so outputs are byte-identical across thread configurations.
struct FactorPaths {
  int n_paths = 0;
  int n_weeks = 0;  // horizon + 1
  std::vector<double> y;

  double at(int path, int week) const {
    return y[static_cast<std::size_t>(path) * n_weeks + week];
  }
};

FactorPaths simulate_factor_paths(const CirParams& params,
                                  const SimulationConfig& config);

// Full simulated panel: lambda(path, week) and spread(path, week, tenor).
struct SpreadSurfacePaths {
  int n_paths = 0;
  int n_weeks = 0;
  std::vector<double> maturities;
  std::vector<double> lambdas;  // (path, week)
  std::vector<double> spreads;  // (path, week, maturity)

  double lambda(int path, int week) const {
    return lambdas[static_cast<std::size_t>(path) * n_weeks + week];
  }
  double spread(int path, int week, int mat) const {
    return spreads[(static_cast<std::size_t>(path) * n_weeks + week) *
                       maturities.size() +
                   mat];
  }
  // Cross-path slice at one (week, maturity) cell, path order.
  std::vector<double> slice(int week, int mat) const;
};

struct CellSummary {
  double mean = 0.0;
  std::vector<double> quantiles;
};

struct SimulationSummary {
  int horizon_weeks = 0;
  std::vector<double> maturities;
  std::vector<double> quantile_levels;
  std::vector<CellSummary> cells;  // week-major: (week, maturity)

  const CellSummary& at(int week, int mat) const {
    return cells[static_cast<std::size_t>(week) * maturities.size() + mat];
  }
};

// Diffuse lambda = y + psi from the market state at t=0 and price the
// spread term structure pathwise. Curves must cover horizon + max tenor
// (checked up front).
SpreadSurfacePaths simulate_paths(const CirppModel& model,
                                  const SurvivalCurve& market_survival,
                                  double delta,
                                  const SimulationConfig& config);

// Same engine, streaming reduction: holds only the factor grid and one
// scratch column, never the (path, week, maturity) tensor.
SimulationSummary simulate_summary(const CirppModel& model,
                                   const SurvivalCurve& market_survival,
                                   double delta,
                                   const SimulationConfig& config,
                                   const std::vector<double>& quantile_levels);

SimulationSummary summarize(const SpreadSurfacePaths& paths,
                            const std::vector<double>& quantile_levels);

}  // namespace cirspread

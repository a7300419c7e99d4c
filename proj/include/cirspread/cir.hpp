#pragma once

#include <vector>

#include "cirspread/curves.hpp"

namespace cirspread {

// Square-root diffusion parameters. Construction enforces strict
// positivity and the Feller condition 2*kappa*theta >= sigma^2, so the
// factor stays strictly positive and the transition parameters below are
// well defined.
struct CirParams {
  CirParams(double kappa, double theta, double sigma, double y0);

  double kappa;  // mean-reversion speed, 1/year
  double theta;  // long-run level, 1/year
  double sigma;  // diffusion coefficient of the sqrt term
  double y0;     // initial factor level, 1/year

  double h() const;  // sqrt(kappa^2 + 2 sigma^2)
};

struct AffineFactors {
  double h;
  double a;  // A(t,T)
  double b;  // B(t,T)
};

// Zero-coupon factors of the square-root model over [t,T]. Evaluated via
// the rearrangement with numerator and denominator divided by e^{(T-t)h},
// which cannot overflow for any horizon.
AffineFactors affine_factors(const CirParams& params, double t, double T);

// ln A(0,dt) and B(0,dt) directly; the log form is what the pricing and
// shift code consumes.
double log_affine_a(const CirParams& params, double dt);
double affine_b(const CirParams& params, double dt);

struct ShiftDerivatives {
  double d;  // D(t) = d/dt ln A(0,t)
  double e;  // E(t) = d/dt B(0,t)
};

// Closed-form derivatives entering the deterministic shift. D(0) = 0 and
// E(0) = 1.
ShiftDerivatives shift_derivatives(const CirParams& params, double t);

// Var[lambda(T)] = y0 sigma^2/kappa (e^{-kT} - e^{-2kT})
//                + theta sigma^2/(2 kappa) (1 - e^{-kT})^2.
double intensity_variance(const CirParams& params, double T);

// Deterministic-shift extension of the square-root intensity:
// lambda(t) = y(t) + psi(t) with psi(t) = lambda_m(t) + D(t) - y0 E(t),
// chosen so the model reproduces the market survival curve at t = 0.
// psi is cached on the weekly grid (the simulation's evaluation points)
// and computed exactly on cache misses.
class CirppModel {
 public:
  CirppModel(CirParams params, HazardCurve market_hazard);

  const CirParams& params() const { return params_; }
  const HazardCurve& market_hazard() const { return hazard_; }

  double psi(double t) const;
  double lambda0() const { return hazard_.hazard(0.0); }
  double max_time() const { return hazard_.max_time(); }

 private:
  double psi_exact(double t) const;

  CirParams params_;
  HazardCurve hazard_;
  std::vector<double> psi_week_;  // psi at k/52
};

// lnS(t,T | lambda_t) is affine in y = lambda_t - psi(t):
// lnS = log_det - b * y. Precomputing the pair lets the simulation price
// a whole column of paths with one exp per path.
struct SurvivalCoefficients {
  double log_det;
  double b;
};

SurvivalCoefficients conditional_survival_coefficients(
    const CirppModel& model, const SurvivalCurve& market_survival, double t,
    double T);

// Conditional survival probability S(t,T) given lambda(t). At t = 0 with
// lambda(0) = y0 + psi(0) this reproduces the market curve exactly.
double conditional_survival(const CirppModel& model,
                            const SurvivalCurve& market_survival, double t,
                            double T, double lambda_t);

double log_conditional_survival(const CirppModel& model,
                                const SurvivalCurve& market_survival,
                                double t, double T, double lambda_t);

}  // namespace cirspread

#pragma once

#include <optional>

#include "cirspread/cir.hpp"
#include "cirspread/curves.hpp"

namespace cirspread {

// One-factor Gaussian short-rate state for the risk-free leg. The drift
// fit to the initial discount curve is implicit in the bond formula, so
// only the mean reversion, volatility and current state are needed.
struct HullWhiteParams {
  HullWhiteParams(double a, double sigma_r, double r_t);

  double a;        // mean reversion, > 0
  double sigma_r;  // short-rate volatility, >= 0
  double r_t;      // short-rate state at valuation time
};

// Everything the pricing formulas consume. Non-owning: the referenced
// curves and model must outlive the call site.
struct PricingInputs {
  double delta;  // recovery in (0,1]
  const CirppModel& model;
  const SurvivalCurve& market_survival;
  const DiscountCurve& discount;
  std::optional<HullWhiteParams> hw;
};

// Hull-White zero-coupon bond P(t,T) = A_hw e^{-B_hw r_t}, fitted to the
// market discount curve. At t=0 with r_t = f(0,0) it returns P_m(0,T).
double risk_free_bond(const PricingInputs& inputs, double t, double T);

// H(t,T) = P(t,T) [delta + (1-delta) S(t,T)].
double defaultable_bond(const PricingInputs& inputs, double t, double T,
                        double lambda_t);

// Sp(t,T) = -ln[delta + (1-delta) S(t,T)] / (T-t). Discount-free: does
// not touch the Hull-White leg. Requires t < T strictly.
double credit_spread(const PricingInputs& inputs, double t, double T,
                     double lambda_t);

// Sp = -ln(H/P)/(T-t), i.e. the yield gap Z_r - Z. Requires 0 < H <= P.
double spread_from_prices(double h_price, double p_price, double t, double T);

}  // namespace cirspread

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cirspread {

// Market-implied survival term structure S(0,t). Pillars are strictly
// increasing in t with S(0)=1 prepended; interpolation is linear in the
// cumulative hazard (log-linear survival), which keeps survival monotone
// and forward hazard non-negative. No extrapolation beyond the last pillar.
class SurvivalCurve {
 public:
  struct Pillar {
    double t;         // year-fraction
    double survival;  // in (0,1]
  };

  explicit SurvivalCurve(std::vector<Pillar> pillars);

  double survival(double t) const;      // exact at pillars
  double log_survival(double t) const;  // -Lambda(t)
  double cumulative_hazard(double t) const;

  double max_time() const { return pillars_.back().t; }
  const std::vector<Pillar>& pillars() const { return pillars_; }

 private:
  std::vector<Pillar> pillars_;       // first is (0, 1)
  std::vector<double> cum_hazard_;    // -ln S at pillars
};

// Piecewise-constant default intensity. Segment i applies on
// (t_{i-1}, t_i]; hazard(0) is the first segment's value.
class HazardCurve {
 public:
  struct Segment {
    double t_end;
    double hazard;  // per annum, >= 0
  };

  explicit HazardCurve(std::vector<Segment> segments);

  double hazard(double t) const;
  double cumulative(double t) const;  // Lambda(t), piecewise linear
  double survival(double t) const;    // exp(-Lambda(t))

  double max_time() const { return segments_.back().t_end; }
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
  std::vector<double> cum_at_end_;  // Lambda at segment ends
};

// Risk-free discounting P(0,t) with log-linear interpolation; the
// instantaneous forward f(0,t) is the piecewise-constant slope of -ln P.
class DiscountCurve {
 public:
  struct Pillar {
    double t;
    double df;
  };

  explicit DiscountCurve(std::vector<Pillar> pillars);

  static DiscountCurve flat(double rate, double max_t);

  double discount(double t) const;      // exact at pillars
  double log_discount(double t) const;
  double forward(double t) const;       // forward(0) = first segment

  double max_time() const { return pillars_.back().t; }
  const std::vector<Pillar>& pillars() const { return pillars_; }

 private:
  std::vector<Pillar> pillars_;  // first is (0, 1)
  std::vector<double> log_df_;
};

// Par credit spread quotes Sp(0,T), decimal per annum, pillar container.
class SpreadCurve {
 public:
  struct Pillar {
    double t;       // > 0
    double spread;  // decimal per annum
  };

  explicit SpreadCurve(std::vector<Pillar> pillars);

  const std::vector<Pillar>& pillars() const { return pillars_; }

 private:
  std::vector<Pillar> pillars_;
};

// One observation date of a CDS curve: premium in decimal per annum.
class CdsQuoteCurve {
 public:
  CdsQuoteCurve(std::string quote_date, std::vector<double> tenors,
                std::vector<double> spreads, int premium_frequency,
                double recovery);

  const std::string& quote_date() const { return quote_date_; }
  const std::vector<double>& tenors() const { return tenors_; }
  const std::vector<double>& spreads() const { return spreads_; }
  int premium_frequency() const { return premium_frequency_; }
  double recovery() const { return recovery_; }

 private:
  std::string quote_date_;
  std::vector<double> tenors_;
  std::vector<double> spreads_;
  int premium_frequency_;
  double recovery_;
};

// Piecewise-constant-hazard CDS bootstrap. Conventions: premium paid
// premium_frequency times per year with no accrual-on-default, protection
// leg integrated on a weekly grid with midpoint discounting. The returned
// curves reprice every quote to |PV| <= 1e-10 per unit notional.
std::pair<SurvivalCurve, HazardCurve> bootstrap_survival_from_cds(
    const CdsQuoteCurve& quotes, const DiscountCurve& discount);

// Present value (protection minus premium, unit notional, protection
// buyer) of one CDS under given curves; the repricing check for the
// bootstrap and a building block for its root solve.
double cds_value(double tenor, double spread, int premium_frequency,
                 double recovery, const HazardCurve& hazard,
                 const DiscountCurve& discount);

// S(0,T) = (exp(-T Sp(0,T)) - delta) / (1 - delta) applied pillar-wise.
// Each pillar must satisfy Sp(0,T) < -ln(delta)/T.
SurvivalCurve implied_survival_from_spreads(const SpreadCurve& spreads,
                                            double delta);

// Forward slopes of the cumulative hazard between survival pillars.
HazardCurve hazard_from_survival(const SurvivalCurve& curve);

// Inverse of hazard_from_survival: survival pillars at segment ends.
SurvivalCurve survival_from_hazard(const HazardCurve& curve);

}  // namespace cirspread

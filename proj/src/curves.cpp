#include "cirspread/curves.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cirspread/errors.hpp"

namespace cirspread {

namespace {

// Locate the segment [t_i, t_{i+1}] containing t in an ascending pillar
// grid that starts at 0. Throws on extrapolation.
template <typename Pillars, typename GetT>
std::size_t segment_index(const Pillars& pillars, GetT get_t, double t,
                          const char* what) {
  if (t < 0.0 || t > get_t(pillars.back())) {
    std::ostringstream msg;
    msg << what << ": t=" << t << " outside curve domain [0, "
        << get_t(pillars.back()) << "]";
    throw ValidationError(msg.str());
  }
  std::size_t hi = 1;
  while (get_t(pillars[hi]) < t) ++hi;
  return hi - 1;
}

}  // namespace

SurvivalCurve::SurvivalCurve(std::vector<Pillar> pillars) {
  if (pillars.empty())
    throw ValidationError("SurvivalCurve: no pillars");
  std::sort(pillars.begin(), pillars.end(),
            [](const Pillar& a, const Pillar& b) { return a.t < b.t; });
  if (pillars.front().t == 0.0) {
    if (pillars.front().survival != 1.0)
      throw ValidationError("SurvivalCurve: S(0) must be 1");
  } else {
    pillars.insert(pillars.begin(), Pillar{0.0, 1.0});
  }
  double prev_t = -1.0;
  double prev_s = 1.0 + 1e-15;
  for (const Pillar& p : pillars) {
    if (p.t <= prev_t)
      throw ValidationError("SurvivalCurve: pillar times must be strictly increasing");
    if (!(p.survival > 0.0 && p.survival <= 1.0)) {
      std::ostringstream msg;
      msg << "SurvivalCurve: survival " << p.survival << " at t=" << p.t
          << " outside (0,1]";
      throw ValidationError(msg.str());
    }
    if (p.survival > prev_s) {
      std::ostringstream msg;
      msg << "SurvivalCurve: survival increases at t=" << p.t;
      throw ValidationError(msg.str());
    }
    prev_t = p.t;
    prev_s = p.survival;
  }
  pillars_ = std::move(pillars);
  cum_hazard_.reserve(pillars_.size());
  for (const Pillar& p : pillars_) cum_hazard_.push_back(-std::log(p.survival));
  cum_hazard_.front() = 0.0;
}

double SurvivalCurve::cumulative_hazard(double t) const {
  const std::size_t i = segment_index(
      pillars_, [](const Pillar& p) { return p.t; }, t, "SurvivalCurve");
  const Pillar& a = pillars_[i];
  if (t == a.t) return cum_hazard_[i];
  const Pillar& b = pillars_[i + 1];
  const double w = (t - a.t) / (b.t - a.t);
  return cum_hazard_[i] + w * (cum_hazard_[i + 1] - cum_hazard_[i]);
}

double SurvivalCurve::log_survival(double t) const {
  return -cumulative_hazard(t);
}

double SurvivalCurve::survival(double t) const {
  const std::size_t i = segment_index(
      pillars_, [](const Pillar& p) { return p.t; }, t, "SurvivalCurve");
  if (t == pillars_[i].t) return pillars_[i].survival;
  if (i + 1 < pillars_.size() && t == pillars_[i + 1].t)
    return pillars_[i + 1].survival;
  return std::exp(log_survival(t));
}

HazardCurve::HazardCurve(std::vector<Segment> segments) {
  if (segments.empty()) throw ValidationError("HazardCurve: no segments");
  double prev_t = 0.0;
  double cum = 0.0;
  for (const Segment& s : segments) {
    if (s.t_end <= prev_t)
      throw ValidationError("HazardCurve: segment ends must be strictly increasing and positive");
    if (!(s.hazard >= 0.0) || !std::isfinite(s.hazard)) {
      std::ostringstream msg;
      msg << "HazardCurve: negative or non-finite hazard at t_end=" << s.t_end;
      throw ValidationError(msg.str());
    }
    cum += s.hazard * (s.t_end - prev_t);
    cum_at_end_.push_back(cum);
    prev_t = s.t_end;
  }
  segments_ = std::move(segments);
}

double HazardCurve::hazard(double t) const {
  if (t < 0.0 || t > max_time()) {
    std::ostringstream msg;
    msg << "HazardCurve: t=" << t << " outside [0, " << max_time() << "]";
    throw ValidationError(msg.str());
  }
  std::size_t i = 0;
  while (segments_[i].t_end < t) ++i;
  return segments_[i].hazard;
}

double HazardCurve::cumulative(double t) const {
  if (t < 0.0 || t > max_time()) {
    std::ostringstream msg;
    msg << "HazardCurve: t=" << t << " outside [0, " << max_time() << "]";
    throw ValidationError(msg.str());
  }
  std::size_t i = 0;
  while (segments_[i].t_end < t) ++i;
  const double seg_start = i == 0 ? 0.0 : segments_[i - 1].t_end;
  const double cum_start = i == 0 ? 0.0 : cum_at_end_[i - 1];
  return cum_start + segments_[i].hazard * (t - seg_start);
}

double HazardCurve::survival(double t) const {
  return std::exp(-cumulative(t));
}

DiscountCurve::DiscountCurve(std::vector<Pillar> pillars) {
  if (pillars.empty()) throw ValidationError("DiscountCurve: no pillars");
  std::sort(pillars.begin(), pillars.end(),
            [](const Pillar& a, const Pillar& b) { return a.t < b.t; });
  if (pillars.front().t == 0.0) {
    if (pillars.front().df != 1.0)
      throw ValidationError("DiscountCurve: P(0,0) must be 1");
  } else {
    pillars.insert(pillars.begin(), Pillar{0.0, 1.0});
  }
  if (pillars.size() < 2)
    throw ValidationError("DiscountCurve: need at least one pillar beyond t=0");
  double prev_t = -1.0;
  for (const Pillar& p : pillars) {
    if (p.t <= prev_t)
      throw ValidationError("DiscountCurve: pillar times must be strictly increasing");
    if (!(p.df > 0.0) || !std::isfinite(p.df)) {
      std::ostringstream msg;
      msg << "DiscountCurve: non-positive discount factor at t=" << p.t;
      throw ValidationError(msg.str());
    }
    prev_t = p.t;
  }
  pillars_ = std::move(pillars);
  log_df_.reserve(pillars_.size());
  for (const Pillar& p : pillars_) log_df_.push_back(std::log(p.df));
  log_df_.front() = 0.0;
}

DiscountCurve DiscountCurve::flat(double rate, double max_t) {
  if (!(max_t > 0.0)) throw ValidationError("DiscountCurve::flat: max_t must be > 0");
  return DiscountCurve({{max_t, std::exp(-rate * max_t)}});
}

double DiscountCurve::log_discount(double t) const {
  const std::size_t i = segment_index(
      pillars_, [](const Pillar& p) { return p.t; }, t, "DiscountCurve");
  const Pillar& a = pillars_[i];
  if (t == a.t) return log_df_[i];
  const Pillar& b = pillars_[i + 1];
  const double w = (t - a.t) / (b.t - a.t);
  return log_df_[i] + w * (log_df_[i + 1] - log_df_[i]);
}

double DiscountCurve::discount(double t) const {
  const std::size_t i = segment_index(
      pillars_, [](const Pillar& p) { return p.t; }, t, "DiscountCurve");
  if (t == pillars_[i].t) return pillars_[i].df;
  if (i + 1 < pillars_.size() && t == pillars_[i + 1].t)
    return pillars_[i + 1].df;
  return std::exp(log_discount(t));
}

double DiscountCurve::forward(double t) const {
  const std::size_t i = segment_index(
      pillars_, [](const Pillar& p) { return p.t; }, t, "DiscountCurve");
  // Slope of the segment with t in (t_i, t_{i+1}]; forward(0) is the
  // first segment's slope (left-continuous elsewhere).
  const std::size_t seg = (i + 1 < pillars_.size()) ? i : i - 1;
  return -(log_df_[seg + 1] - log_df_[seg]) /
         (pillars_[seg + 1].t - pillars_[seg].t);
}

SpreadCurve::SpreadCurve(std::vector<Pillar> pillars) {
  if (pillars.empty()) throw ValidationError("SpreadCurve: no pillars");
  std::sort(pillars.begin(), pillars.end(),
            [](const Pillar& a, const Pillar& b) { return a.t < b.t; });
  double prev_t = 0.0;
  for (const Pillar& p : pillars) {
    if (!(p.t > prev_t))
      throw ValidationError("SpreadCurve: tenors must be positive and strictly increasing");
    if (!std::isfinite(p.spread))
      throw ValidationError("SpreadCurve: non-finite spread");
    prev_t = p.t;
  }
  pillars_ = std::move(pillars);
}

CdsQuoteCurve::CdsQuoteCurve(std::string quote_date,
                             std::vector<double> tenors,
                             std::vector<double> spreads,
                             int premium_frequency, double recovery)
    : quote_date_(std::move(quote_date)),
      tenors_(std::move(tenors)),
      spreads_(std::move(spreads)),
      premium_frequency_(premium_frequency),
      recovery_(recovery) {
  if (tenors_.empty() || tenors_.size() != spreads_.size())
    throw ValidationError("CdsQuoteCurve: tenors and spreads must be non-empty and equal length");
  double prev = 0.0;
  for (double t : tenors_) {
    if (!(t > prev))
      throw ValidationError("CdsQuoteCurve: tenors must be strictly increasing and positive");
    prev = t;
  }
  for (double s : spreads_) {
    if (!(s >= 0.0) || !std::isfinite(s))
      throw ValidationError("CdsQuoteCurve: spreads must be non-negative");
  }
  if (premium_frequency_ < 1)
    throw ValidationError("CdsQuoteCurve: premium frequency must be >= 1");
  if (!(recovery_ > 0.0 && recovery_ < 1.0))
    throw ValidationError("CdsQuoteCurve: recovery must lie in (0,1)");
}

namespace {

std::vector<double> premium_times(double tenor, int freq) {
  std::vector<double> times;
  const double step = 1.0 / freq;
  int j = 1;
  for (; j * step < tenor - 1e-12; ++j) times.push_back(j * step);
  times.push_back(tenor);  // final payment, possibly a stub
  return times;
}

}  // namespace

double cds_value(double tenor, double spread, int premium_frequency,
                 double recovery, const HazardCurve& hazard,
                 const DiscountCurve& discount) {
  // Premium leg: no accrual-on-default.
  double premium = 0.0;
  double prev = 0.0;
  for (double tj : premium_times(tenor, premium_frequency)) {
    premium += spread * (tj - prev) * discount.discount(tj) * hazard.survival(tj);
    prev = tj;
  }
  // Protection leg on a weekly grid, midpoint discounting.
  double protection = 0.0;
  const int n_steps = static_cast<int>(std::ceil(tenor * 52.0 - 1e-9));
  double u_prev = 0.0;
  double s_prev = 1.0;
  for (int k = 1; k <= n_steps; ++k) {
    const double u = std::min(tenor, k / 52.0);
    const double s = hazard.survival(u);
    protection += discount.discount(0.5 * (u_prev + u)) * (s_prev - s);
    u_prev = u;
    s_prev = s;
  }
  protection *= (1.0 - recovery);
  return protection - premium;
}

std::pair<SurvivalCurve, HazardCurve> bootstrap_survival_from_cds(
    const CdsQuoteCurve& quotes, const DiscountCurve& discount) {
  if (discount.max_time() < quotes.tenors().back()) {
    std::ostringstream msg;
    msg << "bootstrap: discount curve ends at " << discount.max_time()
        << " but longest CDS tenor is " << quotes.tenors().back();
    throw ValidationError(msg.str());
  }

  std::vector<HazardCurve::Segment> segments;
  for (std::size_t i = 0; i < quotes.tenors().size(); ++i) {
    const double tenor = quotes.tenors()[i];
    const double spread = quotes.spreads()[i];

    auto value_at = [&](double lambda_i) {
      auto trial = segments;
      trial.push_back({tenor, lambda_i});
      return cds_value(tenor, spread, quotes.premium_frequency(),
                       quotes.recovery(), HazardCurve(std::move(trial)),
                       discount);
    };

    if (spread == 0.0) {
      // Zero premium prices to zero only with no default risk added.
      segments.push_back({tenor, 0.0});
      continue;
    }

    // Protection minus premium is increasing in the new segment's hazard:
    // value_at(0) > 0 would require a negative hazard.
    const double at_zero = value_at(0.0);
    if (at_zero > 0.0) {
      std::ostringstream msg;
      msg << "bootstrap: quote at tenor " << tenor
          << " implies a negative hazard (arbitrage across pillars)";
      throw ValidationError(msg.str());
    }

    double lo = 0.0;
    double hi = 1.0;
    int expand = 0;
    while (value_at(hi) < 0.0) {
      lo = hi;
      hi *= 2.0;
      if (++expand > 16) {
        std::ostringstream msg;
        msg << "bootstrap: root solve failed to bracket tenor " << tenor;
        throw NumericalError(msg.str());
      }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (value_at(mid) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    const double lambda_i = 0.5 * (lo + hi);
    if (!std::isfinite(lambda_i)) {
      std::ostringstream msg;
      msg << "bootstrap: root solve did not converge at tenor " << tenor;
      throw NumericalError(msg.str());
    }
    segments.push_back({tenor, lambda_i});
  }

  HazardCurve hazard(segments);
  return {survival_from_hazard(hazard), std::move(hazard)};
}

SurvivalCurve implied_survival_from_spreads(const SpreadCurve& spreads,
                                            double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw ValidationError("implied_survival_from_spreads: recovery must lie in (0,1)");
  std::vector<SurvivalCurve::Pillar> pillars;
  pillars.reserve(spreads.pillars().size());
  const double log_delta = -std::log(delta);
  for (const auto& p : spreads.pillars()) {
    if (!(p.spread < log_delta / p.t)) {
      std::ostringstream msg;
      msg << "implied_survival_from_spreads: spread " << p.spread
          << " at tenor " << p.t << " violates the bound -ln(delta)/T = "
          << log_delta / p.t << " (implied survival would be <= 0)";
      throw ValidationError(msg.str());
    }
    const double s = (std::exp(-p.t * p.spread) - delta) / (1.0 - delta);
    pillars.push_back({p.t, s});
  }
  return SurvivalCurve(std::move(pillars));
}

HazardCurve hazard_from_survival(const SurvivalCurve& curve) {
  std::vector<HazardCurve::Segment> segments;
  const auto& pillars = curve.pillars();
  for (std::size_t i = 1; i < pillars.size(); ++i) {
    const double dl = -std::log(pillars[i].survival) -
                      (-std::log(pillars[i - 1].survival));
    segments.push_back({pillars[i].t, dl / (pillars[i].t - pillars[i - 1].t)});
  }
  if (segments.empty())
    throw ValidationError("hazard_from_survival: curve has no pillars beyond t=0");
  return HazardCurve(std::move(segments));
}

SurvivalCurve survival_from_hazard(const HazardCurve& curve) {
  std::vector<SurvivalCurve::Pillar> pillars;
  for (const auto& seg : curve.segments())
    pillars.push_back({seg.t_end, curve.survival(seg.t_end)});
  return SurvivalCurve(std::move(pillars));
}

}  // namespace cirspread

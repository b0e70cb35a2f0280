// Copyright 2026 The hv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hv/market.hpp"

#include <algorithm>
#include <cmath>

#include "hv/errors.hpp"
#include "hv/info_design.hpp"

namespace hv {

namespace {

constexpr double kClosedFormBound = 1e-14;

long double to_ld(const Rat& r) { return static_cast<long double>(r.to_double()); }

void require_weight(const Rat& alpha) {
  if (alpha.sign() <= 0 || alpha >= Rat(1)) {
    throw InvalidParameter("welfare weight " + alpha.str() + " must lie in (0,1)");
  }
}

void require_block(int t) {
  if (t < 1) throw InvalidParameter("price-reset interval must be >= 1");
}

}  // namespace

MarketParams MarketParams::make(Rat delta, Rat alpha, int t) {
  require_discount(delta);
  require_weight(alpha);
  require_block(t);
  return MarketParams{std::move(delta), std::move(alpha), t};
}

const char* to_string(PricingRegime r) noexcept {
  return r == PricingRegime::Dynamic ? "dynamic" : "sticky";
}

bool PriceSchedule::participation() const {
  for (std::size_t k = 0; k < prices.size(); ++k) {
    if (willingness[k] < prices[k]) return false;
  }
  return true;
}

PriceSchedule price_schedule_from_values(const std::vector<Rat>& history_values, int t) {
  require_block(t);
  PriceSchedule s;
  s.t = t;
  s.regime = t == 1 ? PricingRegime::Dynamic : PricingRegime::Sticky;
  s.willingness = history_values;
  s.prices.reserve(history_values.size());
  for (std::size_t k = 0; k < history_values.size(); ++k) {
    const std::size_t leader = (k / static_cast<std::size_t>(t)) * static_cast<std::size_t>(t);
    s.prices.push_back(history_values[leader]);
  }
  return s;
}

PriceSchedule dynamic_price_path(const InformationStructure& pi, int horizon,
                                 const EngineLimits& limits) {
  return sticky_price_path(pi, 1, horizon, limits);
}

PriceSchedule sticky_price_path(const InformationStructure& pi, int t, int horizon,
                                const EngineLimits& limits) {
  require_block(t);
  const auto sel = best_equilibrium_payoffs(pi, horizon, limits);
  return price_schedule_from_values(sel.profile.history_value, t);
}

SurplusReport surpluses(const InformationStructure& pi, const MarketParams& params,
                        const Rat& tolerance, const SocialValueOptions& options) {
  if (params.t != 1) {
    throw InvalidParameter("dynamic surpluses need t = 1; use the sticky regime for t = " +
                           std::to_string(params.t));
  }
  return sticky_surpluses(pi, params, tolerance, options);
}

SurplusReport sticky_surpluses(const InformationStructure& pi, const MarketParams& params,
                               const Rat& tolerance, const SocialValueOptions& options) {
  const MarketParams p = MarketParams::make(params.delta, params.alpha, params.t);
  const int n = truncation_horizon(p.delta, tolerance, options.horizon_cap, p.t);
  EngineLimits limits = options.limits;
  limits.lexicographic_cap = std::max(limits.lexicographic_cap, options.horizon_cap);

  const auto sel = best_equilibrium_payoffs(pi, n, limits);
  SurplusReport r;
  r.schedule = price_schedule_from_values(sel.profile.history_value, p.t);
  r.regime = r.schedule.regime;
  r.t = p.t;
  r.horizon = n;
  r.participation = r.schedule.participation();

  // Truncation at a multiple of t keeps whole blocks, so the per-period sum
  // equals (1 - delta^t) sum_k delta^{kt} V_{kt+1} over the kept blocks.
  const Rat& v = sel.profile.single_signal;
  Rat weight = Rat(1) - p.delta;
  Rat rents;
  for (std::size_t k = 0; k < r.schedule.prices.size(); ++k) {
    r.seller += weight * r.schedule.prices[k];
    rents += weight * (r.schedule.willingness[k] - r.schedule.prices[k]);
    weight *= p.delta;
  }
  const Rat tail = p.delta.pow(static_cast<unsigned>(n)) * Rat(1, 4);
  r.seller_bound = tail;
  r.buyer = v + rents;
  r.buyer_bound = p.t == 1 ? Rat(0) : tail;
  r.social = p.alpha * r.buyer + (Rat(1) - p.alpha) * r.seller;
  r.social_bound = p.alpha * r.buyer_bound + (Rat(1) - p.alpha) * r.seller_bound;
  return r;
}

Rat ternary_sticky_seller_value(const Rat& eps, const Rat& delta, int t) {
  require_discount(delta);
  require_block(t);
  if (eps.sign() < 0 || eps > Rat(1)) throw InvalidParameter("eps must lie in [0,1]");
  const unsigned ut = static_cast<unsigned>(t);
  const Rat dt = delta.pow(ut);
  const Rat et = eps.pow(ut);
  return dt * Rat(1, 4) * eps * (Rat(1) - et) / (Rat(1) - dt * et);
}

Rat ternary_sticky_buyer_value(const Rat& eps, const Rat& delta, int t) {
  return ternary_single_signal_value(eps) + ternary_social_value(eps, delta) -
         ternary_sticky_seller_value(eps, delta, t);
}

Rat ternary_weighted_value(const Rat& eps, const MarketParams& params) {
  return params.alpha * ternary_sticky_buyer_value(eps, params.delta, params.t) +
         (Rat(1) - params.alpha) * ternary_sticky_seller_value(eps, params.delta, params.t);
}

RealEstimate optimal_eps_seller(const Rat& delta) { return optimal_eps_social(delta); }

Rat optimal_eps_buyer() { return Rat(0); }

RealEstimate optimal_eps_seller_sticky(const Rat& delta, int t) {
  require_discount(delta);
  require_block(t);
  if (t == 1) return optimal_eps_social(delta);
  // Root in u = eps^t of c u^2 - b u + 1 = 0 with c = delta^t,
  // b = t + 1 - (t - 1) c; the smaller root, written without cancellation.
  const long double c = std::pow(to_ld(delta), static_cast<long double>(t));
  const long double b = (t + 1) - (t - 1) * c;
  const long double u = 2.0L / (b + std::sqrt(b * b - 4.0L * c));
  const long double e = std::pow(u, 1.0L / t);
  return RealEstimate{static_cast<double>(e), kClosedFormBound, std::nullopt};
}

WeightedOptimum optimal_eps_weighted(const Rat& delta, const Rat& alpha) {
  require_discount(delta);
  require_weight(alpha);
  WeightedOptimum out;
  out.threshold = alpha / (Rat(1) - alpha);
  if (delta <= out.threshold) {
    out.eps = RealEstimate{0.0, 0.0, Rat(0)};
    return out;
  }
  // delta > alpha/(1-alpha) forces alpha < 1/2.
  // eps* = (1 - sqrt(q)) / delta = (1 - q) / (delta (1 + sqrt(q))),
  // q = (1 - alpha)(1 - delta) / (1 - 2 alpha).
  const Rat q = (Rat(1) - alpha) * (Rat(1) - delta) / (Rat(1) - Rat(2) * alpha);
  const long double sq = std::sqrt(to_ld(q));
  const long double e = to_ld(Rat(1) - q) / (to_ld(delta) * (1.0L + sq));
  out.interior = true;
  out.eps = RealEstimate{static_cast<double>(e), kClosedFormBound, std::nullopt};
  return out;
}

StickyWeightedOptimum optimal_eps_weighted_sticky(const MarketParams& params, double tolerance) {
  const MarketParams p = MarketParams::make(params.delta, params.alpha, params.t);
  StickyWeightedOptimum out;
  if (p.alpha >= half()) {
    out.eps = RealEstimate{0.0, 0.0, Rat(0)};
    return out;
  }
  if (p.t == 1) {
    out.eps = optimal_eps_weighted(p.delta, p.alpha).eps;
    return out;
  }
  const auto m = maximize_concave(
      [&](double e) { return ternary_weighted_value(Rat::from_double(e), p); }, tolerance);
  out.eps = RealEstimate{m.argmax, m.bound, std::nullopt};
  out.numeric_only = true;
  return out;
}

}  // namespace hv

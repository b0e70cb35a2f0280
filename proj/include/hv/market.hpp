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

// Monopoly market for history. A seller records the actions of buyers who
// purchased access and offers the record to later buyers with a
// take-it-or-leave-it price. With dynamic pricing the price to buyer i is
// the value of history for agent i; with sticky pricing the price can only
// be reset every t periods and each block is priced at its leader's value.

#pragma once

#include <vector>

#include "hv/belief.hpp"
#include "hv/learning.hpp"
#include "hv/optimize.hpp"
#include "hv/rational.hpp"

namespace hv {

struct MarketParams {
  Rat delta;  // discount factor, (0,1)
  Rat alpha;  // buyer weight in the social surplus, (0,1)
  int t = 1;  // price-reset interval

  /// Throws InvalidParameter on degenerate delta, alpha, or t.
  static MarketParams make(Rat delta, Rat alpha, int t = 1);
};

enum class PricingRegime { Dynamic, Sticky };
const char* to_string(PricingRegime r) noexcept;

struct PriceSchedule {
  std::vector<Rat> prices;       // by buyer, index i-1
  std::vector<Rat> willingness;  // value of history for buyer i given i-1 recorded purchases
  PricingRegime regime = PricingRegime::Dynamic;
  int t = 1;

  /// Every buyer's willingness to pay covers the posted price.
  bool participation() const;
};

/// Schedule implied by a vector of history values; t = 1 is dynamic.
PriceSchedule price_schedule_from_values(const std::vector<Rat>& history_values, int t);

PriceSchedule dynamic_price_path(const InformationStructure& pi, int horizon,
                                 const EngineLimits& limits = {});
PriceSchedule sticky_price_path(const InformationStructure& pi, int t, int horizon,
                                const EngineLimits& limits = {});

struct SurplusReport {
  Rat seller;
  Rat buyer;
  Rat social;
  Rat seller_bound;  // |true - reported| <= bound
  Rat buyer_bound;
  Rat social_bound;
  PricingRegime regime = PricingRegime::Dynamic;
  int t = 1;
  int horizon = 0;
  bool participation = true;
  PriceSchedule schedule;
};

/// Dynamic regime (params.t must be 1): seller surplus is the discounted
/// price stream, buyer surplus is the single-signal payoff.
SurplusReport surpluses(const InformationStructure& pi, const MarketParams& params,
                        const Rat& tolerance, const SocialValueOptions& options = {});

/// Sticky regime; truncation is at a multiple of t. t = 1 reproduces
/// surpluses() exactly.
SurplusReport sticky_surpluses(const InformationStructure& pi, const MarketParams& params,
                               const Rat& tolerance, const SocialValueOptions& options = {});

/// (delta^t / 4) eps (1 - eps^t) / (1 - delta^t eps^t).
Rat ternary_sticky_seller_value(const Rat& eps, const Rat& delta, int t);
/// Buyer surplus under pi(eps) with sticky prices.
Rat ternary_sticky_buyer_value(const Rat& eps, const Rat& delta, int t);
/// alpha * buyer + (1 - alpha) * seller under pi(eps).
Rat ternary_weighted_value(const Rat& eps, const MarketParams& params);

RealEstimate optimal_eps_seller(const Rat& delta);
Rat optimal_eps_buyer();
RealEstimate optimal_eps_seller_sticky(const Rat& delta, int t);

struct WeightedOptimum {
  RealEstimate eps;
  bool interior = false;  // false: eps* = 0 exactly
  Rat threshold;          // alpha / (1 - alpha); interior iff delta > threshold
};

/// Dynamic-regime optimum of alpha * buyer + (1 - alpha) * seller over the
/// ternary family.
WeightedOptimum optimal_eps_weighted(const Rat& delta, const Rat& alpha);

struct StickyWeightedOptimum {
  RealEstimate eps;
  bool numeric_only = false;  // no closed form; located by search
};

/// Sticky-regime weighted optimum: 0 for alpha >= 1/2, otherwise a numeric
/// argmax over eps.
StickyWeightedOptimum optimal_eps_weighted_sticky(const MarketParams& params, double tolerance);

}  // namespace hv

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

#include "hv/info_design.hpp"

#include <cmath>

#include "hv/errors.hpp"

namespace hv {

namespace {

// Closed forms are evaluated in long double and rounded once to double.
constexpr double kClosedFormBound = 1e-14;

void require_unit_interval(const Rat& eps) {
  if (eps.sign() < 0 || eps > Rat(1)) {
    throw InvalidParameter("eps " + eps.str() + " must lie in [0,1]");
  }
}

long double to_ld(const Rat& r) { return static_cast<long double>(r.to_double()); }

// min{1, num/den} with the ratio read as +infinity when den = 0.
Rat capped_ratio(const Rat& num, const Rat& den) {
  if (den.is_zero()) return Rat(1);
  return min(Rat(1), num / den);
}

Rat conclusive_high_mass(const BeliefDistribution& mu) {
  auto a = mu.find(Belief(Rat(1)));
  return a ? a->weight_h : Rat(0);
}

Rat conclusive_low_mass(const BeliefDistribution& mu) {
  auto a = mu.find(Belief(Rat(0)));
  return a ? a->weight_l : Rat(0);
}

}  // namespace

TernaryStructure::TernaryStructure(Rat eps) : eps_(std::move(eps)) { require_unit_interval(eps_); }

InformationStructure TernaryStructure::structure() const {
  const Rat informative = Rat(1) - eps_;
  std::vector<Signal> s;
  if (!informative.is_zero()) s.push_back(Signal{"low", Rat(0), informative});
  if (!eps_.is_zero()) s.push_back(Signal{"mid", eps_, eps_});
  if (!informative.is_zero()) s.push_back(Signal{"high", informative, Rat(0)});
  return InformationStructure::validate(std::move(s));
}

std::optional<TernaryStructure> TernaryStructure::recognize(const InformationStructure& pi) {
  const BeliefDistribution mu = induced_belief_distribution(pi);
  for (const auto& a : mu.atoms()) {
    if (!a.belief.is_conclusive() && a.belief.p_h() != half()) return std::nullopt;
  }
  auto mid = mu.find(Belief(half()));
  return TernaryStructure(mid ? mid->weight_h : Rat(0));
}

SplitKernel split_kernel(const Signal& s) {
  SplitKernel k;
  k.h_to_half = capped_ratio(s.like_l, s.like_h);
  k.h_to_one = s.like_h.is_zero() ? Rat(0) : max(Rat(0), (s.like_h - s.like_l) / s.like_h);
  k.l_to_half = capped_ratio(s.like_h, s.like_l);
  k.l_to_zero = s.like_l.is_zero() ? Rat(0) : max(Rat(0), (s.like_l - s.like_h) / s.like_l);
  return k;
}

InformationStructure split_to_ternary(const InformationStructure& pi) {
  Rat low_l, mid_h, mid_l, high_h;
  for (const auto& s : pi.signals()) {
    if ((s.like_h + s.like_l).is_zero()) continue;
    const SplitKernel k = split_kernel(s);
    mid_h += s.like_h * k.h_to_half;
    high_h += s.like_h * k.h_to_one;
    mid_l += s.like_l * k.l_to_half;
    low_l += s.like_l * k.l_to_zero;
  }
  if (mid_h != mid_l) throw InternalError("split produced an off-center middle belief");
  std::vector<Signal> out;
  if (!low_l.is_zero()) out.push_back(Signal{"low", Rat(0), low_l});
  if (!mid_h.is_zero()) out.push_back(Signal{"mid", mid_h, mid_l});
  if (!high_h.is_zero()) out.push_back(Signal{"high", high_h, Rat(0)});
  return InformationStructure::validate(std::move(out));
}

const char* to_string(EquivalenceWitness w) noexcept {
  switch (w) {
    case EquivalenceWitness::IdenticalBeliefs: return "identical-beliefs";
    case EquivalenceWitness::LowerSupportHighMass: return "lower-support-high-mass";
    case EquivalenceWitness::UpperSupportLowMass: return "upper-support-low-mass";
    case EquivalenceWitness::None: return "none";
  }
  return "none";
}

EquivalenceResult check_equivalence(const InformationStructure& a, const InformationStructure& b,
                                    int horizon, const EngineLimits& limits) {
  const BeliefDistribution mu_a = induced_belief_distribution(a);
  const BeliefDistribution mu_b = induced_belief_distribution(b);
  EquivalenceResult r;
  r.horizon = horizon;
  if (mu_a == mu_b) {
    r.witness = EquivalenceWitness::IdenticalBeliefs;
  } else if (!mu_a.has_interior_above_half() && !mu_b.has_interior_above_half() &&
             conclusive_high_mass(mu_a) == conclusive_high_mass(mu_b)) {
    r.witness = EquivalenceWitness::LowerSupportHighMass;
  } else if (!mu_a.has_interior_below_half() && !mu_b.has_interior_below_half() &&
             conclusive_low_mass(mu_a) == conclusive_low_mass(mu_b)) {
    r.witness = EquivalenceWitness::UpperSupportLowMass;
  }
  r.equivalent = r.witness != EquivalenceWitness::None;

  if (horizon > 0) {
    const auto pa = best_equilibrium_payoffs(a, horizon, limits).profile;
    const auto pb = best_equilibrium_payoffs(b, horizon, limits).profile;
    r.values_match = pa.single_signal == pb.single_signal && pa.history_value == pb.history_value;
  }
  return r;
}

Rat ternary_value_i(const Rat& eps, int i) {
  require_unit_interval(eps);
  if (i < 1) throw InvalidParameter("agent index must be >= 1");
  return (eps - eps.pow(static_cast<unsigned>(i))) * Rat(1, 4);
}

Rat ternary_single_signal_value(const Rat& eps) {
  require_unit_interval(eps);
  return (Rat(1) - eps) * Rat(1, 4);
}

Rat ternary_social_value(const Rat& eps, const Rat& delta) {
  require_unit_interval(eps);
  require_discount(delta);
  return delta * eps * (Rat(1) - eps) / (Rat(4) * (Rat(1) - delta * eps));
}

AgentOptimum optimal_eps_agent(int i) {
  if (i < 1) throw InvalidParameter("agent index must be >= 1");
  AgentOptimum out;
  if (i == 1) {
    out.eps = RealEstimate{1.0, 0.0, Rat(1)};
    out.degenerate = true;
    return out;
  }
  if (i == 2) {
    out.eps = RealEstimate{0.5, 0.0, Rat(1, 2)};
    return out;
  }
  // Stationary point of eps - eps^i: i eps^(i-1) = 1.
  const long double e = std::pow(1.0L / i, 1.0L / (i - 1));
  out.eps = RealEstimate{static_cast<double>(e), kClosedFormBound, std::nullopt};
  return out;
}

RealEstimate optimal_eps_social(const Rat& delta) {
  require_discount(delta);
  const long double r = std::sqrt(1.0L - to_ld(delta));
  return RealEstimate{static_cast<double>(1.0L / (1.0L + r)), kClosedFormBound, std::nullopt};
}

RealEstimate max_ternary_social_value(const Rat& delta) {
  require_discount(delta);
  // (1 - r)^2 / (4 delta) with r = sqrt(1 - delta); (1 - r) = delta / (1 + r).
  const long double d = to_ld(delta);
  const long double r = std::sqrt(1.0L - d);
  const long double v = d / ((1.0L + r) * (1.0L + r) * 4.0L);
  return RealEstimate{static_cast<double>(v), kClosedFormBound, std::nullopt};
}

DominanceReport verify_dominance(const InformationStructure& pi, int horizon,
                                 const EngineLimits& limits) {
  DominanceReport r{.original = pi, .split = split_to_ternary(pi)};
  r.split_eps = TernaryStructure::recognize(r.split).value().eps();

  const auto orig = best_equilibrium_payoffs(pi, horizon, limits).profile;
  const auto split = best_equilibrium_payoffs(r.split, horizon, limits).profile;
  r.v_original = orig.single_signal;
  r.v_split = split.single_signal;
  r.equilibrium_original = orig.equilibrium;
  r.benchmark_original = orig.full_observation;
  r.history_original = orig.history_value;
  r.history_split = split.history_value;

  const BeliefDistribution mu = induced_belief_distribution(pi);
  r.two_sided = mu.has_interior_below_half() && mu.has_interior_above_half();
  r.v_preserved = r.v_original == r.v_split;
  r.weakly_dominates = true;
  r.strict_for_later_agents = true;
  for (int i = 1; i <= horizon; ++i) {
    const Rat& a = r.history_original[static_cast<std::size_t>(i - 1)];
    const Rat& b = r.history_split[static_cast<std::size_t>(i - 1)];
    if (b < a) r.weakly_dominates = false;
    if (i >= 2 && !(a < b)) r.strict_for_later_agents = false;
  }
  r.sandwich = true;
  for (std::size_t k = 0; k < orig.equilibrium.size(); ++k) {
    if (orig.equilibrium[k] < orig.single_signal) r.sandwich = false;
    if (k < orig.full_observation.size() && orig.full_observation[k] < orig.equilibrium[k]) {
      r.sandwich = false;
    }
  }
  return r;
}

}  // namespace hv

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

// Information design for the value of history: the ternary family, the
// split that maps any structure into it, equivalence checks, and the
// optimal amount of noise.

#pragma once

#include <optional>
#include <vector>

#include "hv/belief.hpp"
#include "hv/learning.hpp"
#include "hv/optimize.hpp"
#include "hv/rational.hpp"

namespace hv {

/// Mixture of full and no information: beliefs {0, 1/2, 1}, with the
/// uninformative signal drawn with probability eps in either state.
class TernaryStructure {
 public:
  explicit TernaryStructure(Rat eps);

  const Rat& eps() const { return eps_; }
  /// Signals "low" (0, 1-eps), "mid" (eps, eps), "high" (1-eps, 0); zero-mass
  /// signals are omitted.
  InformationStructure structure() const;

  /// Recognizes a structure whose posteriors all lie in {0, 1/2, 1}.
  static std::optional<TernaryStructure> recognize(const InformationStructure& pi);

 private:
  Rat eps_;
};

/// Conditional kernel for one original signal: where its H-mass and L-mass
/// go among the split beliefs {0, 1/2, 1}.
struct SplitKernel {
  Rat h_to_half, h_to_one;   // given H; h_to_zero is always 0
  Rat l_to_half, l_to_zero;  // given L; l_to_one is always 0
};

SplitKernel split_kernel(const Signal& s);

/// Sends every interior belief below 1/2 to {0, 1/2} and above 1/2 to
/// {1/2, 1}, preserving Bayes plausibility signal by signal. The result is
/// always a ternary structure.
InformationStructure split_to_ternary(const InformationStructure& pi);

enum class EquivalenceWitness {
  IdenticalBeliefs,       // same induced belief distribution
  LowerSupportHighMass,   // interior support in (0,1/2], equal P(mu=1|H)
  UpperSupportLowMass,    // interior support in [1/2,1), equal P(mu=0|L)
  None,
};

const char* to_string(EquivalenceWitness w) noexcept;

struct EquivalenceResult {
  bool equivalent = false;  // a sufficient condition holds
  EquivalenceWitness witness = EquivalenceWitness::None;
  bool values_match = false;  // V and history values agree for i <= horizon
  int horizon = 0;
};

EquivalenceResult check_equivalence(const InformationStructure& a, const InformationStructure& b,
                                    int horizon, const EngineLimits& limits = {});

/// (eps - eps^i) / 4.
Rat ternary_value_i(const Rat& eps, int i);
/// (1 - eps) / 4.
Rat ternary_single_signal_value(const Rat& eps);
/// delta eps (1 - eps) / (4 (1 - delta eps)).
Rat ternary_social_value(const Rat& eps, const Rat& delta);

struct AgentOptimum {
  RealEstimate eps;
  bool degenerate = false;  // i = 1: the objective is identically zero
};

/// Maximizer of (eps - eps^i)/4 over [0,1], i.e. (1/i)^(1/(i-1)).
AgentOptimum optimal_eps_agent(int i);

/// (1 - sqrt(1 - delta)) / delta, evaluated as 1 / (1 + sqrt(1 - delta)).
RealEstimate optimal_eps_social(const Rat& delta);

/// (1/4)(1 - sqrt(1 - delta))^2 / delta.
RealEstimate max_ternary_social_value(const Rat& delta);

struct DominanceReport {
  InformationStructure original;
  InformationStructure split;
  Rat split_eps{};
  Rat v_original{};
  Rat v_split{};
  std::vector<Rat> equilibrium_original{};  // equilibrium payoff per agent
  std::vector<Rat> benchmark_original{};    // full-observation payoff per agent
  std::vector<Rat> history_original{};      // value of history, original
  std::vector<Rat> history_split{};         // value of history, split
  bool two_sided = false;         // interior beliefs on both sides of 1/2
  bool v_preserved = false;
  bool weakly_dominates = false;
  bool strict_for_later_agents = false;  // strict for every 2 <= i <= N
  bool sandwich = false;                 // single <= equilibrium <= benchmark, original

  bool verdict() const { return v_preserved && weakly_dominates; }
};

DominanceReport verify_dominance(const InformationStructure& pi, int horizon,
                                 const EngineLimits& limits = {});

}  // namespace hv

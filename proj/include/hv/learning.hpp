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

// Sequential social learning with full observation of past actions.
//
// Agent i sees the action history of agents 1..i-1 and one private signal,
// then picks a in {0, 1}. Action 1 pays +1/2 in state H and -1/2 in state L;
// action 0 pays nothing. Because payoffs depend only on the agent's own
// action, equilibrium play is myopic: take 1 when the composed posterior is
// above 1/2, 0 when below. The only freedom is what to do at exactly 1/2,
// which changes what later agents can infer from the history.
//
// The public state after i-1 actions is summarized by a layer of nodes keyed
// by public belief. Histories with the same public belief are merged, so
// tie-breaking is Markov in (agent index, public belief).

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hv/belief.hpp"
#include "hv/rational.hpp"

namespace hv {

enum class Action : unsigned char { Zero = 0, One = 1 };

struct NodeKey {
  int depth;  // index of the agent acting at this node
  Rat public_belief;

  friend bool operator==(const NodeKey&, const NodeKey&) = default;
  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

/// Behaviour of an agent whose composed posterior is exactly 1/2.
struct TieBreakRule {
  enum class Kind { Action1, Action0, FollowSignalDirection, PerNodeTable };

  Kind kind = Kind::Action1;
  std::map<NodeKey, Action> table;  // used by PerNodeTable only

  static TieBreakRule action1() { return {Kind::Action1, {}}; }
  static TieBreakRule action0() { return {Kind::Action0, {}}; }
  /// Follow the private signal's side of 1/2; an uninformative signal at an
  /// uninformative history falls back to action 1.
  static TieBreakRule follow_signal() { return {Kind::FollowSignalDirection, {}}; }
  static TieBreakRule per_node(std::map<NodeKey, Action> t) {
    return {Kind::PerNodeTable, std::move(t)};
  }
};

const char* to_string(TieBreakRule::Kind kind) noexcept;

struct PublicNode {
  int depth = 1;
  Rat like_h{1};  // P(history | H)
  Rat like_l{1};  // P(history | L)

  Belief public_belief() const { return Belief(like_h / (like_h + like_l)); }
};

struct EngineLimits {
  int horizon_cap = 12;        // simulate_equilibrium
  int lexicographic_cap = 8;   // best_equilibrium_payoffs
  int iid_cap = kDefaultIidCap;
  std::size_t max_indifference_nodes = 12;  // per layer
  std::size_t max_candidates = 4096;        // distinct layers kept by the selection
  std::size_t max_layer_nodes = 1u << 14;
};

/// Exact per-agent values. Vectors are indexed by agent i-1.
struct PayoffProfile {
  Rat single_signal;                 // V
  std::vector<Rat> equilibrium;      // per-agent equilibrium payoff
  std::vector<Rat> full_observation; // direct-observation benchmark, i <= min(N, iid cap)
  std::vector<Rat> history_value;    // equilibrium payoff minus single_signal

  int horizon() const { return static_cast<int>(equilibrium.size()); }
};

struct EquilibriumSelection {
  PayoffProfile profile;
  TieBreakRule rule;  // PerNodeTable realizing the selected play
  std::size_t indifference_nodes = 0;  // reachable tie nodes on the selected path
  std::size_t layers_examined = 0;
};

/// V(pi) = sum over beliefs x > 1/2 of (x - 1/2) P(x).
Rat single_signal_payoff(const BeliefDistribution& mu);
Rat single_signal_payoff(const InformationStructure& pi);

/// Expected payoff from observing i i.i.d. signals directly.
Rat full_observation_payoff(const InformationStructure& pi, int i, int cap = kDefaultIidCap);

/// Public-belief layers faced by agents 1..N under a fixed rule; layer k
/// holds the nodes of agent k+1.
std::vector<std::vector<PublicNode>> public_layers(const InformationStructure& pi, int horizon,
                                                   const TieBreakRule& rule,
                                                   const EngineLimits& limits = {});

PayoffProfile simulate_equilibrium(const InformationStructure& pi, int horizon,
                                   const TieBreakRule& rule, const EngineLimits& limits = {});

/// Lexicographic selection: among deterministic tie-break tables, maximize
/// V_1, then V_2 among the maximizers, and so on up to V_N.
EquilibriumSelection best_equilibrium_payoffs(const InformationStructure& pi, int horizon,
                                              const EngineLimits& limits = {});

struct SocialValue {
  Rat partial;      // (1-delta) sum_{i<=N} delta^{i-1} history_value[i-1]
  Rat error_bound;  // delta^N / 4; true value lies in [partial, partial + bound]
  int horizon = 0;
  PayoffProfile profile;
};

struct SocialValueOptions {
  int horizon_cap = 64;
  EngineLimits limits{};
};

/// Smallest N >= 1 with delta^N / 4 <= tolerance; throws HorizonCapExceeded
/// (with the achievable tolerance) when that N exceeds the cap.
int truncation_horizon(const Rat& delta, const Rat& tolerance, int horizon_cap, int multiple = 1);

SocialValue social_value(const InformationStructure& pi, const Rat& delta, const Rat& tolerance,
                         const SocialValueOptions& options = {});

/// Rejects delta outside (0, 1).
void require_discount(const Rat& delta);

}  // namespace hv

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

#include "hv/learning.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "hv/errors.hpp"

namespace hv {

namespace {

// Public belief -> (P(history | H), P(history | L)), merged over histories.
using Layer = std::map<Rat, std::pair<Rat, Rat>>;

Layer root_layer() {
  Layer l;
  l.emplace(half(), std::make_pair(Rat(1), Rat(1)));
  return l;
}

struct StepResult {
  Rat payoff;                  // payoff of the agent acting on the layer
  Layer next;                  // layer faced by the following agent
  std::vector<Rat> tie_nodes;  // nodes where a tie has positive probability
};

void add_mass(Layer& layer, const Rat& h, const Rat& l) {
  const Rat total = h + l;
  if (total.is_zero()) return;
  auto& slot = layer[h / total];
  slot.first += h;
  slot.second += l;
}

// decide(key, private_belief) picks the action at an exact tie.
template <class Decide>
StepResult advance(const Layer& layer, int depth, const BeliefDistribution& mu, Decide&& decide,
                   const EngineLimits& limits) {
  StepResult out;
  const Rat quarter(1, 4);
  Rat in_h, in_l, out_h, out_l;
  for (const auto& [q, mass] : layer) {
    const auto& [h, l] = mass;
    in_h += h;
    in_l += l;
    Rat one_h, one_l, zero_h, zero_l;
    bool tie_here = false;
    for (const auto& atom : mu.atoms()) {
      const Rat jh = h * atom.weight_h;
      const Rat jl = l * atom.weight_l;
      if (jh.is_zero() && jl.is_zero()) continue;
      const auto c = jh <=> jl;
      Action a;
      if (c > 0) {
        a = Action::One;
      } else if (c < 0) {
        a = Action::Zero;
      } else {
        tie_here = true;
        a = decide(NodeKey{depth, q}, atom.belief);
      }
      // Action 1 is worth (jh - jl)/4 in joint probability units; action 0 is
      // worth nothing. The chosen action must not lose to the alternative.
      const Rat gain_one = (jh - jl) * quarter;
      if ((a == Action::One && gain_one.sign() < 0) || (a == Action::Zero && gain_one.sign() > 0)) {
        throw InternalError("best-response violated at depth " + std::to_string(depth));
      }
      if (a == Action::One) {
        out.payoff += gain_one;
        one_h += jh;
        one_l += jl;
      } else {
        zero_h += jh;
        zero_l += jl;
      }
    }
    if (tie_here) out.tie_nodes.push_back(q);
    out_h += one_h + zero_h;
    out_l += one_l + zero_l;
    add_mass(out.next, one_h, one_l);
    add_mass(out.next, zero_h, zero_l);
  }
  if (in_h != out_h || in_l != out_l) {
    throw InternalError("public tree lost probability mass at depth " + std::to_string(depth));
  }
  if (out.next.size() > limits.max_layer_nodes) {
    throw CapExceeded("public layer at depth " + std::to_string(depth + 1) + " has " +
                      std::to_string(out.next.size()) + " nodes (cap " +
                      std::to_string(limits.max_layer_nodes) + ")");
  }
  return out;
}

Action fixed_rule_action(const TieBreakRule& rule, const NodeKey& key, const Belief& priv) {
  switch (rule.kind) {
    case TieBreakRule::Kind::Action1: return Action::One;
    case TieBreakRule::Kind::Action0: return Action::Zero;
    case TieBreakRule::Kind::FollowSignalDirection:
      return priv.p_h() < half() ? Action::Zero : Action::One;
    case TieBreakRule::Kind::PerNodeTable: {
      auto it = rule.table.find(key);
      if (it == rule.table.end()) {
        throw InvalidTieBreakTable("no tie-break entry for agent " + std::to_string(key.depth) +
                                   " at public belief " + key.public_belief.str());
      }
      return it->second;
    }
  }
  return Action::One;
}

std::vector<PublicNode> to_nodes(const Layer& layer, int depth) {
  std::vector<PublicNode> nodes;
  nodes.reserve(layer.size());
  for (const auto& [q, m] : layer) nodes.push_back(PublicNode{depth, m.first, m.second});
  return nodes;
}

void fill_benchmark(PayoffProfile& p, const BeliefDistribution& mu, int horizon, int iid_cap) {
  const int upto = std::min(horizon, iid_cap);
  BeliefDistribution acc = mu;
  for (int i = 1; i <= upto; ++i) {
    if (i > 1) acc = iid_belief_distribution(mu, i, iid_cap);
    p.full_observation.push_back(single_signal_payoff(acc));
  }
}

void require_horizon(int horizon, int cap, const char* what) {
  if (horizon < 1) throw InvalidParameter("horizon must be >= 1");
  if (horizon > cap) {
    throw HorizonCapExceeded(std::string(what) + " horizon " + std::to_string(horizon) +
                             " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

const char* to_string(TieBreakRule::Kind kind) noexcept {
  switch (kind) {
    case TieBreakRule::Kind::Action1: return "action1";
    case TieBreakRule::Kind::Action0: return "action0";
    case TieBreakRule::Kind::FollowSignalDirection: return "follow-signal";
    case TieBreakRule::Kind::PerNodeTable: return "per-node-table";
  }
  return "action1";
}

Rat single_signal_payoff(const BeliefDistribution& mu) {
  Rat v;
  for (const auto& a : mu.atoms()) {
    if (a.belief.p_h() > half()) v += (a.belief.p_h() - half()) * a.mass();
  }
  return v;
}

Rat single_signal_payoff(const InformationStructure& pi) {
  return single_signal_payoff(induced_belief_distribution(pi));
}

Rat full_observation_payoff(const InformationStructure& pi, int i, int cap) {
  return single_signal_payoff(iid_belief_distribution(pi, i, cap));
}

std::vector<std::vector<PublicNode>> public_layers(const InformationStructure& pi, int horizon,
                                                   const TieBreakRule& rule,
                                                   const EngineLimits& limits) {
  require_horizon(horizon, limits.horizon_cap, "simulation");
  const BeliefDistribution mu = induced_belief_distribution(pi);
  std::vector<std::vector<PublicNode>> out;
  Layer layer = root_layer();
  for (int i = 1; i <= horizon; ++i) {
    out.push_back(to_nodes(layer, i));
    if (i == horizon) break;
    auto step = advance(
        layer, i, mu,
        [&](const NodeKey& k, const Belief& b) { return fixed_rule_action(rule, k, b); }, limits);
    layer = std::move(step.next);
  }
  return out;
}

PayoffProfile simulate_equilibrium(const InformationStructure& pi, int horizon,
                                   const TieBreakRule& rule, const EngineLimits& limits) {
  require_horizon(horizon, limits.horizon_cap, "simulation");
  const BeliefDistribution mu = induced_belief_distribution(pi);
  PayoffProfile p;
  p.single_signal = single_signal_payoff(mu);
  Layer layer = root_layer();
  for (int i = 1; i <= horizon; ++i) {
    auto step = advance(
        layer, i, mu,
        [&](const NodeKey& k, const Belief& b) { return fixed_rule_action(rule, k, b); }, limits);
    p.equilibrium.push_back(step.payoff);
    p.history_value.push_back(step.payoff - p.single_signal);
    layer = std::move(step.next);
  }
  fill_benchmark(p, mu, horizon, limits.iid_cap);
  return p;
}

EquilibriumSelection best_equilibrium_payoffs(const InformationStructure& pi, int horizon,
                                              const EngineLimits& limits) {
  require_horizon(horizon, limits.lexicographic_cap, "lexicographic selection");
  const BeliefDistribution mu = induced_belief_distribution(pi);

  struct Candidate {
    Layer layer;
    std::map<NodeKey, Action> table;
    std::size_t ties = 0;
  };

  EquilibriumSelection sel;
  PayoffProfile& p = sel.profile;
  p.single_signal = single_signal_payoff(mu);

  std::vector<Candidate> candidates;
  candidates.push_back(Candidate{root_layer(), {}, 0});

  const auto probe = [&](const Candidate& c, int depth) {
    // The agent's own payoff does not depend on how ties are broken.
    return advance(
        c.layer, depth, mu, [](const NodeKey&, const Belief&) { return Action::One; }, limits);
  };

  for (int i = 1; i <= horizon; ++i) {
    std::vector<StepResult> probes;
    probes.reserve(candidates.size());
    for (const auto& c : candidates) probes.push_back(probe(c, i));

    Rat best = probes.front().payoff;
    for (const auto& s : probes) best = max(best, s.payoff);
    p.equilibrium.push_back(best);
    p.history_value.push_back(best - p.single_signal);

    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (probes[k].payoff == best) keep.push_back(k);
    }

    if (i == horizon) {
      Candidate& chosen = candidates[keep.front()];
      for (const Rat& q : probes[keep.front()].tie_nodes) {
        chosen.table.emplace(NodeKey{i, q}, Action::One);
      }
      sel.indifference_nodes = chosen.ties + probes[keep.front()].tie_nodes.size();
      sel.rule = TieBreakRule::per_node(std::move(chosen.table));
      break;
    }

    std::vector<Candidate> next;
    std::set<Layer> seen;
    for (std::size_t k : keep) {
      const Candidate& c = candidates[k];
      const auto& ties = probes[k].tie_nodes;
      if (ties.size() > limits.max_indifference_nodes) {
        throw TooManyIndifferenceNodes(
            ties.size(), "agent " + std::to_string(i) + " faces " + std::to_string(ties.size()) +
                             " indifference nodes (bound " +
                             std::to_string(limits.max_indifference_nodes) + ")");
      }
      const std::size_t combos = std::size_t{1} << ties.size();
      for (std::size_t mask = 0; mask < combos; ++mask) {
        std::map<NodeKey, Action> table = c.table;
        for (std::size_t b = 0; b < ties.size(); ++b) {
          table.emplace(NodeKey{i, ties[b]}, (mask >> b) & 1u ? Action::One : Action::Zero);
        }
        auto step = advance(
            c.layer, i, mu,
            [&](const NodeKey& key, const Belief&) { return table.at(key); }, limits);
        ++sel.layers_examined;
        if (!seen.insert(step.next).second) continue;
        next.push_back(Candidate{std::move(step.next), std::move(table), c.ties + ties.size()});
        if (next.size() > limits.max_candidates) {
          throw TooManyIndifferenceNodes(
              ties.size(), "lexicographic selection exceeded " +
                               std::to_string(limits.max_candidates) + " distinct public layers");
        }
      }
    }
    candidates = std::move(next);
  }

  fill_benchmark(p, mu, horizon, limits.iid_cap);
  return sel;
}

void require_discount(const Rat& delta) {
  if (delta.sign() <= 0 || delta >= Rat(1)) {
    throw InvalidParameter("discount factor " + delta.str() + " must lie in (0,1)");
  }
}

int truncation_horizon(const Rat& delta, const Rat& tolerance, int horizon_cap, int multiple) {
  require_discount(delta);
  if (tolerance.sign() <= 0) throw InvalidParameter("tolerance must be positive");
  if (multiple < 1) throw InvalidParameter("block length must be >= 1");
  const Rat quarter(1, 4);
  Rat tail = quarter;
  const Rat step = delta.pow(static_cast<unsigned>(multiple));
  int n = 0;
  while (n + multiple <= horizon_cap) {
    n += multiple;
    tail *= step;
    if (tail <= tolerance) return n;
  }
  throw HorizonCapExceeded("tolerance " + tolerance.decimal() + " needs more than " +
                           std::to_string(horizon_cap) + " agents; achievable tolerance is " +
                           tail.decimal());
}

SocialValue social_value(const InformationStructure& pi, const Rat& delta, const Rat& tolerance,
                         const SocialValueOptions& options) {
  const int n = truncation_horizon(delta, tolerance, options.horizon_cap);
  EngineLimits limits = options.limits;
  limits.lexicographic_cap = std::max(limits.lexicographic_cap, options.horizon_cap);

  SocialValue out;
  out.horizon = n;
  out.profile = best_equilibrium_payoffs(pi, n, limits).profile;
  Rat weight = Rat(1) - delta;
  for (const Rat& v : out.profile.history_value) {
    out.partial += weight * v;
    weight *= delta;
  }
  out.error_bound = delta.pow(static_cast<unsigned>(n)) * Rat(1, 4);
  return out;
}

}  // namespace hv

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

// Binary-state Bayesian updating under a uniform prior. The state space is
// {L, H}; a belief is the probability of H. All arithmetic is exact.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hv/rational.hpp"

namespace hv {

inline constexpr int kDefaultIidCap = 16;

/// Probability of state H, in [0, 1].
class Belief {
 public:
  Belief() : p_h_(half()) {}
  explicit Belief(Rat p_h);

  const Rat& p_h() const { return p_h_; }
  bool is_conclusive() const { return p_h_.is_zero() || p_h_ == Rat(1); }

  friend bool operator==(const Belief&, const Belief&) = default;
  friend auto operator<=>(const Belief& a, const Belief& b) { return a.p_h_ <=> b.p_h_; }

 private:
  Rat p_h_;
};

struct Signal {
  std::string id;
  Rat like_h;  // P(signal | H)
  Rat like_l;  // P(signal | L)

  friend bool operator==(const Signal&, const Signal&) = default;
};

/// Finite signal alphabet with per-state likelihood columns that each sum to
/// exactly one. Signals are kept in their given order so files round-trip;
/// every payoff computation goes through the induced belief distribution,
/// where signals with equal posteriors are merged.
class InformationStructure {
 public:
  /// Throws EmptyAlphabet, NegativeLikelihood, NonStochastic, or
  /// ValidationError("DuplicateSignal").
  static InformationStructure validate(std::vector<Signal> signals);

  const std::vector<Signal>& signals() const { return signals_; }
  const Signal& signal(std::string_view id) const;
  std::size_t size() const { return signals_.size(); }

  /// One signal per distinct posterior, zero-mass signals dropped, ids
  /// taken from the first member of each merged group.
  InformationStructure merged() const;

  friend bool operator==(const InformationStructure&, const InformationStructure&) = default;

 private:
  explicit InformationStructure(std::vector<Signal> s) : signals_(std::move(s)) {}
  std::vector<Signal> signals_;
};

struct BeliefAtom {
  Belief belief;
  Rat weight_h;  // P(belief | H)
  Rat weight_l;  // P(belief | L)

  /// Unconditional probability under the uniform prior.
  Rat mass() const { return (weight_h + weight_l) * half(); }
  friend bool operator==(const BeliefAtom&, const BeliefAtom&) = default;
};

/// Distribution of the posterior, stored as per-state weights on each
/// distinct belief. Atoms are sorted by belief and have positive mass.
class BeliefDistribution {
 public:
  BeliefDistribution() = default;

  /// Merges (weight_h, weight_l) pairs by the posterior they induce; pairs
  /// with zero total weight are dropped.
  static BeliefDistribution from_weights(const std::vector<std::pair<Rat, Rat>>& weights);

  const std::vector<BeliefAtom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  std::optional<BeliefAtom> find(const Belief& b) const;

  /// Unconditional mean of the posterior; equals 1/2 for any valid input.
  Rat mean() const;

  bool has_interior_below_half() const;
  bool has_interior_above_half() const;

  friend bool operator==(const BeliefDistribution&, const BeliefDistribution&) = default;

 private:
  std::vector<BeliefAtom> atoms_;
};

Belief posterior(const Belief& prior, std::string_view signal_id, const InformationStructure& pi);

BeliefDistribution induced_belief_distribution(const InformationStructure& pi);

/// Posterior from two conditionally independent observations whose
/// individual posteriors (from the uniform prior) are a and b.
Belief compose_beliefs(const Belief& a, const Belief& b);

/// Distribution of the composed posterior of n i.i.d. signals.
BeliefDistribution iid_belief_distribution(const InformationStructure& pi, int n,
                                           int cap = kDefaultIidCap);
BeliefDistribution iid_belief_distribution(const BeliefDistribution& single, int n,
                                           int cap = kDefaultIidCap);

}  // namespace hv

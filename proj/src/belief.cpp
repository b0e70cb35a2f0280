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

#include "hv/belief.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hv/errors.hpp"

namespace hv {

Belief::Belief(Rat p_h) : p_h_(std::move(p_h)) {
  if (p_h_ < Rat(0) || p_h_ > Rat(1)) {
    throw InvalidParameter("belief " + p_h_.str() + " outside [0,1]");
  }
}

InformationStructure InformationStructure::validate(std::vector<Signal> signals) {
  if (signals.empty()) throw EmptyAlphabet();
  std::set<std::string> seen;
  Rat sum_h, sum_l;
  for (const auto& s : signals) {
    if (!seen.insert(s.id).second) {
      throw ValidationError("DuplicateSignal", "signal '" + s.id + "' listed twice");
    }
    if (s.like_h.sign() < 0 || s.like_l.sign() < 0) {
      throw NegativeLikelihood("signal '" + s.id + "' has a negative likelihood");
    }
    sum_h += s.like_h;
    sum_l += s.like_l;
  }
  if (sum_h != Rat(1) || sum_l != Rat(1)) {
    throw NonStochastic("likelihood columns sum to (" + sum_h.str() + ", " + sum_l.str() +
                        "), expected (1, 1)");
  }
  return InformationStructure(std::move(signals));
}

const Signal& InformationStructure::signal(std::string_view id) const {
  for (const auto& s : signals_) {
    if (s.id == id) return s;
  }
  throw ValidationError("UnknownSignal", "unknown signal '" + std::string(id) + "'");
}

InformationStructure InformationStructure::merged() const {
  std::vector<Signal> out;
  std::map<Rat, std::size_t> by_belief;
  for (const auto& s : signals_) {
    const Rat total = s.like_h + s.like_l;
    if (total.is_zero()) continue;
    const Rat b = s.like_h / total;
    if (auto it = by_belief.find(b); it != by_belief.end()) {
      out[it->second].like_h += s.like_h;
      out[it->second].like_l += s.like_l;
    } else {
      by_belief.emplace(b, out.size());
      out.push_back(s);
    }
  }
  return InformationStructure(std::move(out));
}

BeliefDistribution BeliefDistribution::from_weights(
    const std::vector<std::pair<Rat, Rat>>& weights) {
  std::map<Rat, std::pair<Rat, Rat>> merged;
  for (const auto& [wh, wl] : weights) {
    const Rat total = wh + wl;
    if (total.is_zero()) continue;
    auto& slot = merged[wh / total];
    slot.first += wh;
    slot.second += wl;
  }
  BeliefDistribution d;
  d.atoms_.reserve(merged.size());
  for (auto& [b, w] : merged) {
    d.atoms_.push_back(BeliefAtom{Belief(b), std::move(w.first), std::move(w.second)});
  }
  return d;
}

std::optional<BeliefAtom> BeliefDistribution::find(const Belief& b) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), b,
                             [](const BeliefAtom& a, const Belief& x) { return a.belief < x; });
  if (it != atoms_.end() && it->belief == b) return *it;
  return std::nullopt;
}

Rat BeliefDistribution::mean() const {
  Rat m;
  for (const auto& a : atoms_) m += a.mass() * a.belief.p_h();
  return m;
}

bool BeliefDistribution::has_interior_below_half() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const BeliefAtom& a) {
    return a.belief.p_h().sign() > 0 && a.belief.p_h() < half();
  });
}

bool BeliefDistribution::has_interior_above_half() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const BeliefAtom& a) {
    return a.belief.p_h() > half() && a.belief.p_h() < Rat(1);
  });
}

Belief posterior(const Belief& prior, std::string_view signal_id, const InformationStructure& pi) {
  const Signal& s = pi.signal(signal_id);
  const Rat num = prior.p_h() * s.like_h;
  const Rat den = num + (Rat(1) - prior.p_h()) * s.like_l;
  if (den.is_zero()) {
    throw ZeroProbabilitySignal("signal '" + s.id + "' has probability zero under prior " +
                                prior.p_h().str());
  }
  return Belief(num / den);
}

BeliefDistribution induced_belief_distribution(const InformationStructure& pi) {
  std::vector<std::pair<Rat, Rat>> w;
  w.reserve(pi.size());
  for (const auto& s : pi.signals()) w.emplace_back(s.like_h, s.like_l);
  return BeliefDistribution::from_weights(w);
}

Belief compose_beliefs(const Belief& a, const Belief& b) {
  const Rat& y = a.p_h();
  const Rat& z = b.p_h();
  const Rat num = y * z;
  const Rat den = num + (Rat(1) - y) * (Rat(1) - z);
  if (den.is_zero()) throw ContradictoryConclusiveBeliefs();
  return Belief(num / den);
}

BeliefDistribution iid_belief_distribution(const BeliefDistribution& single, int n, int cap) {
  if (n < 1) throw InvalidParameter("iid sample size must be >= 1");
  if (n > cap) {
    throw CapExceeded("iid sample size " + std::to_string(n) + " exceeds cap " +
                      std::to_string(cap));
  }
  BeliefDistribution acc = single;
  for (int k = 1; k < n; ++k) {
    std::vector<std::pair<Rat, Rat>> w;
    w.reserve(acc.size() * single.size());
    for (const auto& a : acc.atoms()) {
      for (const auto& b : single.atoms()) {
        w.emplace_back(a.weight_h * b.weight_h, a.weight_l * b.weight_l);
      }
    }
    acc = BeliefDistribution::from_weights(w);
  }
  return acc;
}

BeliefDistribution iid_belief_distribution(const InformationStructure& pi, int n, int cap) {
  return iid_belief_distribution(induced_belief_distribution(pi), n, cap);
}

}  // namespace hv

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

// Independent reference computations for the unit and acceptance tests.
// Histories here are explicit action vectors and are never merged, so the
// oracles share no state-compression logic with the library.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hv/belief.hpp"
#include "hv/info_design.hpp"
#include "hv/rational.hpp"

namespace hv::oracle {

using History = std::vector<int>;
using Layer = std::map<History, std::pair<Rat, Rat>>;  // P(h | H), P(h | L)

inline InformationStructure make(std::vector<std::tuple<std::string, Rat, Rat>> rows) {
  std::vector<Signal> s;
  for (auto& [id, h, l] : rows) s.push_back(Signal{id, h, l});
  return InformationStructure::validate(std::move(s));
}

inline InformationStructure symmetric(const Rat& p) {
  return make({{"s1", p, Rat(1) - p}, {"s2", Rat(1) - p, p}});
}
inline InformationStructure full_information() { return make({{"s1", 1, 0}, {"s2", 0, 1}}); }
inline InformationStructure no_information() {
  return make({{"s1", Rat(1, 3), Rat(1, 3)}, {"s2", Rat(2, 3), Rat(2, 3)}});
}
inline InformationStructure ternary(const Rat& eps) { return TernaryStructure(eps).structure(); }

/// Action taken by agent `depth` at a tie, given its history and signal.
using TieChoice = std::function<int(int depth, const History&, const Signal&)>;

struct Step {
  Rat value;  // payoff of the acting agent
  Layer next;
  std::vector<History> ties;  // histories where some signal ties
};

/// One agent acts on every history of `layer`; `choice(h)` resolves ties.
inline Step act(const InformationStructure& pi, int depth, const Layer& layer,
                const std::function<int(const History&, const Signal&)>& choice) {
  Step out;
  for (const auto& [h, w] : layer) {
    bool tied = false;
    for (const auto& s : pi.signals()) {
      const Rat jh = w.first * s.like_h;
      const Rat jl = w.second * s.like_l;
      if ((jh + jl).is_zero()) continue;
      int a;
      if (jl < jh) {
        a = 1;
      } else if (jh < jl) {
        a = 0;
      } else {
        tied = true;
        a = choice(h, s);
      }
      if (a == 1) out.value += (jh - jl) / Rat(4);
      History g = h;
      g.push_back(a);
      auto& slot = out.next[g];
      slot.first += jh;
      slot.second += jl;
    }
    if (tied) out.ties.push_back(h);
  }
  (void)depth;
  return out;
}

/// Equilibrium payoffs of agents 1..n under a fixed tie rule.
inline std::vector<Rat> values(const InformationStructure& pi, int n, const TieChoice& tie) {
  Layer layer{{History{}, {Rat(1), Rat(1)}}};
  std::vector<Rat> out;
  for (int k = 1; k <= n; ++k) {
    auto st = act(pi, k, layer, [&](const History& h, const Signal& s) { return tie(k, h, s); });
    out.push_back(st.value);
    layer = std::move(st.next);
  }
  return out;
}

inline int always_one(int, const History&, const Signal&) { return 1; }
inline int always_zero(int, const History&, const Signal&) { return 0; }

/// Lexicographically best payoff vector over every deterministic tie choice
/// keyed by the full action history. Exponential; small n only.
inline std::vector<Rat> best_values(const InformationStructure& pi, int n) {
  std::vector<Rat> best;
  std::function<void(int, const Layer&, std::vector<Rat>&)> go = [&](int k, const Layer& layer,
                                                                  std::vector<Rat>& acc) {
    if (k > n) {
      if (best.empty() || std::lexicographical_compare(best.begin(), best.end(), acc.begin(),
                                                       acc.end())) {
        best = acc;
      }
      return;
    }
    const auto probe = act(pi, k, layer, [](const History&, const Signal&) { return 1; });
    const std::size_t m = probe.ties.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      std::map<History, int> table;
      for (std::size_t b = 0; b < m; ++b) table[probe.ties[b]] = (mask >> b) & 1u ? 1 : 0;
      auto st = act(pi, k, layer,
                    [&](const History& h, const Signal&) { return table.at(h); });
      acc.push_back(st.value);
      go(k + 1, st.next, acc);
      acc.pop_back();
    }
  };
  std::vector<Rat> acc;
  go(1, Layer{{History{}, {Rat(1), Rat(1)}}}, acc);
  return best;
}

/// Expected payoff from i i.i.d. signals, by enumerating all sequences.
inline Rat full_observation(const InformationStructure& pi, int i) {
  std::vector<std::pair<Rat, Rat>> seqs{{Rat(1), Rat(1)}};
  for (int k = 0; k < i; ++k) {
    std::vector<std::pair<Rat, Rat>> next;
    for (const auto& [h, l] : seqs) {
      for (const auto& s : pi.signals()) next.emplace_back(h * s.like_h, l * s.like_l);
    }
    seqs = std::move(next);
  }
  Rat v;
  for (const auto& [h, l] : seqs) {
    if (l < h) v += (h - l) / Rat(4);
  }
  return v;
}

/// Discounted block-price stream of the sticky regime, summed over `blocks`
/// blocks; the omitted tail is at most (delta^t)^blocks / 4.
inline Rat sticky_seller_series(const std::function<Rat(int)>& hist_value, const Rat& delta,
                                int t, int blocks) {
  const Rat dt = delta.pow(static_cast<unsigned>(t));
  Rat sum, w(1);
  for (int k = 0; k < blocks; ++k) {
    sum += w * hist_value(k * t + 1);
    w *= dt;
  }
  return (Rat(1) - dt) * sum;
}

}  // namespace hv::oracle

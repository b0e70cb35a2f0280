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

#include "doctest.h"

#include "hv/corpus.hpp"
#include "hv/errors.hpp"
#include "hv/learning.hpp"
#include "oracles.hpp"

using hv::Rat;
using hv::TieBreakRule;
namespace oracle = hv::oracle;

namespace {

std::vector<hv::InformationStructure> corpus(std::uint64_t seed, int size) {
  hv::CorpusOptions opt;
  opt.seed = seed;
  opt.size = size;
  return hv::generate_corpus(opt);
}

}  // namespace

TEST_CASE("single-signal payoff") {
  for (const Rat eps : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(5, 6), Rat(1)}) {
    CHECK(hv::single_signal_payoff(oracle::ternary(eps)) == (Rat(1) - eps) / Rat(4));
  }
  CHECK(hv::single_signal_payoff(oracle::full_information()) == Rat(1, 4));
  CHECK(hv::single_signal_payoff(oracle::symmetric(Rat(2, 3))) == Rat(1, 12));
  CHECK(hv::single_signal_payoff(oracle::no_information()) == Rat(0));
}

TEST_CASE("full-observation payoff matches sequence enumeration") {
  const Rat eps(2, 3);
  for (int i = 1; i <= 6; ++i) {
    CHECK(hv::full_observation_payoff(oracle::ternary(eps), i) ==
          (Rat(1) - eps.pow(static_cast<unsigned>(i))) / Rat(4));
  }
  const auto sym = oracle::symmetric(Rat(2, 3));
  CHECK(hv::full_observation_payoff(sym, 2) == Rat(1, 12));
  CHECK(hv::full_observation_payoff(sym, 1) == hv::single_signal_payoff(sym));
  for (const auto& pi : corpus(3, 25)) {
    for (int i = 1; i <= 4; ++i) {
      CHECK(hv::full_observation_payoff(pi, i) == oracle::full_observation(pi, i));
    }
  }
  CHECK_THROWS_AS(hv::full_observation_payoff(sym, 17), hv::CapExceeded);
}

TEST_CASE("fixed-rule equilibrium payoffs") {
  const auto p = hv::simulate_equilibrium(oracle::ternary(Rat(1, 2)), 3, TieBreakRule::action1());
  CHECK(p.equilibrium == std::vector<Rat>{Rat(1, 8), Rat(3, 16), Rat(7, 32)});

  const auto full = hv::simulate_equilibrium(oracle::full_information(), 6, TieBreakRule::action0());
  for (const auto& v : full.equilibrium) CHECK(v == Rat(1, 4));
  for (const auto& v : full.history_value) CHECK(v == Rat(0));

  const auto sym = oracle::symmetric(Rat(2, 3));
  for (const auto& rule : {TieBreakRule::action1(), TieBreakRule::action0(),
                           TieBreakRule::follow_signal()}) {
    CHECK(hv::simulate_equilibrium(sym, 2, rule).equilibrium[1] == Rat(1, 12));
  }
  CHECK_THROWS_AS(hv::simulate_equilibrium(sym, 13, TieBreakRule::action1()),
                  hv::HorizonCapExceeded);
}

TEST_CASE("fixed-rule payoffs match unmerged history enumeration") {
  for (const auto& pi : corpus(17, 40)) {
    const auto a1 = hv::simulate_equilibrium(pi, 5, TieBreakRule::action1());
    CHECK(a1.equilibrium == oracle::values(pi, 5, oracle::always_one));
    const auto a0 = hv::simulate_equilibrium(pi, 5, TieBreakRule::action0());
    CHECK(a0.equilibrium == oracle::values(pi, 5, oracle::always_zero));
  }
}

TEST_CASE("symmetric structures are invariant to the root tie direction") {
  for (const Rat p : {Rat(2, 3), Rat(3, 4), Rat(5, 7)}) {
    const auto pi = oracle::symmetric(p);
    CHECK(hv::simulate_equilibrium(pi, 6, TieBreakRule::action1()).equilibrium ==
          hv::simulate_equilibrium(pi, 6, TieBreakRule::action0()).equilibrium);
  }
  const auto t = oracle::ternary(Rat(1, 3));
  CHECK(hv::simulate_equilibrium(t, 6, TieBreakRule::action1()).equilibrium ==
        hv::simulate_equilibrium(t, 6, TieBreakRule::action0()).equilibrium);
}

TEST_CASE("public layers conserve probability mass") {
  for (const auto& pi : corpus(23, 30)) {
    for (const auto& rule : {TieBreakRule::action1(), TieBreakRule::follow_signal()}) {
      const auto layers = hv::public_layers(pi, 5, rule);
      REQUIRE(layers.size() == 5);
      for (const auto& layer : layers) {
        Rat h, l;
        for (const auto& n : layer) {
          h += n.like_h;
          l += n.like_l;
        }
        CHECK(h == Rat(1));
        CHECK(l == Rat(1));
      }
    }
  }
}

TEST_CASE("lexicographic selection") {
  for (const Rat eps : {Rat(1, 4), Rat(1, 2), Rat(2, 3)}) {
    const auto sel = hv::best_equilibrium_payoffs(oracle::ternary(eps), 4);
    for (int i = 1; i <= 4; ++i) {
      CHECK(sel.profile.history_value[static_cast<std::size_t>(i - 1)] ==
            (eps - eps.pow(static_cast<unsigned>(i))) / Rat(4));
    }
  }
  for (const auto& v : hv::best_equilibrium_payoffs(oracle::no_information(), 5).profile.history_value) {
    CHECK(v == Rat(0));
  }
  const auto sym = hv::best_equilibrium_payoffs(oracle::symmetric(Rat(2, 3)), 3);
  CHECK(sym.profile.history_value[1] == Rat(0));
  CHECK(sym.profile.history_value[1] <= sym.profile.full_observation[1] - sym.profile.single_signal);
}

TEST_CASE("lexicographic selection matches exhaustive history-keyed tie tables") {
  for (const auto& pi : corpus(29, 30)) {
    const auto sel = hv::best_equilibrium_payoffs(pi, 3);
    CHECK(sel.profile.equilibrium == oracle::best_values(pi, 3));
    // The returned table replays to the same play.
    CHECK(hv::simulate_equilibrium(pi, 3, sel.rule).equilibrium == sel.profile.equilibrium);
  }
  for (const auto& pi : corpus(31, 8)) {
    CHECK(hv::best_equilibrium_payoffs(pi, 4).profile.equilibrium == oracle::best_values(pi, 4));
  }
  CHECK(hv::best_equilibrium_payoffs(oracle::symmetric(Rat(2, 3)), 4).profile.equilibrium ==
        oracle::best_values(oracle::symmetric(Rat(2, 3)), 4));
}

TEST_CASE("sandwich and nonnegative history value") {
  for (const auto& pi : corpus(37, 40)) {
    const auto p = hv::best_equilibrium_payoffs(pi, 5).profile;
    for (std::size_t k = 0; k < 5; ++k) {
      CHECK(p.single_signal <= p.equilibrium[k]);
      CHECK(p.equilibrium[k] <= p.full_observation[k]);
      CHECK(p.history_value[k] == p.equilibrium[k] - p.single_signal);
      CHECK(p.history_value[k] >= Rat(0));
      CHECK(p.equilibrium[k] <= Rat(1, 4));
    }
  }
}

TEST_CASE("tie tables and engine guards") {
  const auto t = oracle::ternary(Rat(1, 2));
  CHECK_THROWS_AS(hv::simulate_equilibrium(t, 2, TieBreakRule::per_node({})),
                  hv::InvalidTieBreakTable);
  hv::EngineLimits tight;
  tight.max_indifference_nodes = 0;
  CHECK_THROWS_AS(hv::best_equilibrium_payoffs(t, 3, tight), hv::TooManyIndifferenceNodes);
  CHECK_THROWS_AS(hv::best_equilibrium_payoffs(t, 9), hv::HorizonCapExceeded);
  hv::EngineLimits wide;
  wide.lexicographic_cap = 12;
  CHECK_NOTHROW(hv::best_equilibrium_payoffs(t, 9, wide));
}

TEST_CASE("social value with certified truncation") {
  const Rat tau = Rat(1, 1 << 20);
  CHECK(hv::truncation_horizon(Rat(1, 2), tau, 64) == 18);
  CHECK(hv::truncation_horizon(Rat(1, 2), tau, 64, 4) == 20);
  CHECK_THROWS_AS(hv::truncation_horizon(Rat(1, 2), tau, 10), hv::HorizonCapExceeded);

  const auto s = hv::social_value(oracle::ternary(Rat(1, 2)), Rat(1, 2), tau);
  CHECK(s.error_bound <= tau);
  CHECK(s.partial <= Rat(1, 24));
  CHECK(Rat(1, 24) <= s.partial + s.error_bound);

  CHECK(hv::social_value(oracle::full_information(), Rat(3, 4), Rat(1, 1000)).partial == Rat(0));
  CHECK(hv::social_value(oracle::ternary(Rat(1)), Rat(3, 4), Rat(1, 1000)).partial == Rat(0));
  CHECK_THROWS_AS(hv::social_value(oracle::ternary(Rat(1, 2)), Rat(1), tau), hv::InvalidParameter);
  CHECK_THROWS_AS(hv::social_value(oracle::ternary(Rat(1, 2)), Rat(0), tau), hv::InvalidParameter);
}

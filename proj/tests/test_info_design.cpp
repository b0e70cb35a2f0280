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

#include <cmath>
#include <limits>

#include "hv/corpus.hpp"
#include "hv/errors.hpp"
#include "hv/info_design.hpp"
#include "hv/optimize.hpp"
#include "oracles.hpp"

using hv::Belief;
using hv::Rat;
namespace oracle = hv::oracle;

namespace {

std::vector<hv::InformationStructure> corpus(std::uint64_t seed, int size) {
  hv::CorpusOptions opt;
  opt.seed = seed;
  opt.size = size;
  return hv::generate_corpus(opt);
}

// beliefs {1/4, 1}, conclusive mass 2/3
hv::InformationStructure quarter_one_sided() {
  return oracle::make({{"low", Rat(1, 3), Rat(1)}, {"high", Rat(2, 3), Rat(0)}});
}

}  // namespace

TEST_CASE("ternary split") {
  const auto split = hv::split_to_ternary(oracle::symmetric(Rat(2, 3)));
  CHECK(hv::induced_belief_distribution(split) ==
        hv::induced_belief_distribution(oracle::ternary(Rat(2, 3))));
  CHECK(hv::TernaryStructure::recognize(split)->eps() == Rat(2, 3));

  for (const Rat eps : {Rat(0), Rat(1, 5), Rat(1, 2), Rat(1)}) {
    const auto t = oracle::ternary(eps);
    CHECK(hv::induced_belief_distribution(hv::split_to_ternary(t)) ==
          hv::induced_belief_distribution(t));
  }
  const auto full = oracle::full_information();
  CHECK(hv::induced_belief_distribution(hv::split_to_ternary(full)) ==
        hv::induced_belief_distribution(full));
}

TEST_CASE("split kernels are Bayes plausible signal by signal") {
  for (const auto& pi : corpus(41, 60)) {
    for (const auto& s : pi.signals()) {
      const auto k = hv::split_kernel(s);
      // The 1/2 cell receives equal mass from both states.
      CHECK(s.like_h * k.h_to_half == s.like_l * k.l_to_half);
      if (s.like_h.sign() > 0) CHECK(k.h_to_half + k.h_to_one == Rat(1));
      if (s.like_l.sign() > 0) CHECK(k.l_to_half + k.l_to_zero == Rat(1));
      const Rat total = s.like_h + s.like_l;
      if (total.is_zero()) continue;
      const Rat half_mass = s.like_h * k.h_to_half + s.like_l * k.l_to_half;
      const Rat one_mass = s.like_h * k.h_to_one;
      CHECK((half_mass * Rat(1, 2) + one_mass) / total == s.like_h / total);
    }
    const auto split = hv::split_to_ternary(pi);
    const auto dist = hv::induced_belief_distribution(split);
    for (const auto& a : dist.atoms()) {
      const Rat& x = a.belief.p_h();
      CHECK((x.is_zero() || x == Rat(1, 2) || x == Rat(1)));
    }
    CHECK(hv::single_signal_payoff(split) == hv::single_signal_payoff(pi));
  }
}

TEST_CASE("equivalence conditions") {
  const auto r = hv::check_equivalence(quarter_one_sided(), oracle::ternary(Rat(1, 3)), 4);
  CHECK(r.equivalent);
  CHECK(r.witness == hv::EquivalenceWitness::LowerSupportHighMass);
  CHECK(r.values_match);
  const auto p = hv::best_equilibrium_payoffs(quarter_one_sided(), 2).profile;
  CHECK(p.single_signal == Rat(1, 6));
  CHECK(p.history_value[1] == Rat(1, 18));

  const auto mirror = oracle::make({{"low", Rat(0), Rat(2, 3)}, {"high", Rat(1), Rat(1, 3)}});
  CHECK(hv::check_equivalence(mirror, oracle::ternary(Rat(1, 3)), 4).witness ==
        hv::EquivalenceWitness::UpperSupportLowMass);

  const auto diff = hv::check_equivalence(oracle::ternary(Rat(1, 4)), oracle::ternary(Rat(1, 2)), 3);
  CHECK_FALSE(diff.equivalent);
  CHECK_FALSE(diff.values_match);

  const auto sym = oracle::symmetric(Rat(3, 4));
  const auto self = hv::check_equivalence(sym, sym, 3);
  CHECK(self.equivalent);
  CHECK(self.witness == hv::EquivalenceWitness::IdenticalBeliefs);
  CHECK(self.values_match);
}

TEST_CASE("ternary closed forms agree with the engine") {
  CHECK(hv::ternary_value_i(Rat(1, 2), 2) == Rat(1, 16));
  for (int i = 1; i <= 6; ++i) {
    CHECK(hv::ternary_value_i(Rat(0), i) == Rat(0));
    CHECK(hv::ternary_value_i(Rat(1), i) == Rat(0));
  }
  CHECK(hv::ternary_social_value(Rat(1, 2), Rat(1, 2)) == Rat(1, 24));
  CHECK(hv::ternary_social_value(Rat(0), Rat(3, 4)) == Rat(0));
  CHECK(hv::ternary_social_value(Rat(2, 3), Rat(3, 4)) == Rat(1, 12));
  for (const Rat eps : {Rat(1, 3), Rat(3, 5)}) {
    const auto p = hv::best_equilibrium_payoffs(oracle::ternary(eps), 6).profile;
    for (int i = 1; i <= 6; ++i) {
      CHECK(p.history_value[static_cast<std::size_t>(i - 1)] == hv::ternary_value_i(eps, i));
    }
    CHECK(p.single_signal == hv::ternary_single_signal_value(eps));
    const Rat delta(2, 3);
    const auto s = hv::social_value(oracle::ternary(eps), delta, Rat(1, 1000000));
    const Rat closed = hv::ternary_social_value(eps, delta);
    CHECK(s.partial <= closed);
    CHECK(closed <= s.partial + s.error_bound);
  }
}

TEST_CASE("concave maximization") {
  const auto social = hv::maximize_concave(
      [](double e) { return hv::ternary_social_value(Rat::from_double(e), Rat(3, 4)); }, 1e-9);
  CHECK(std::abs(social.argmax - 2.0 / 3.0) <= 1e-9);
  CHECK(social.bound <= 1e-9);
  const auto two = hv::maximize_concave(
      [](double e) { return hv::ternary_value_i(Rat::from_double(e), 2); }, 1e-9);
  CHECK(std::abs(two.argmax - 0.5) <= 1e-9);
  const auto flat = hv::maximize_concave([](double) { return 1.0; }, 1e-9);
  CHECK(flat.flat);
  CHECK(flat.argmax >= 0.0);
  CHECK(flat.argmax <= 1.0);
  const auto edge = hv::maximize_concave([](double e) { return -e; }, 1e-9);
  CHECK(edge.argmax == 0.0);
  CHECK_THROWS_AS(
      hv::maximize_concave([](double e) { return e < 0.5 ? std::nan("") : 1.0; }, 1e-9),
      hv::NonFiniteEvaluation);
  CHECK_THROWS_AS(hv::maximize_concave([](double e) { return e; }, 0.0), hv::InvalidParameter);
}

TEST_CASE("agent-optimal noise level") {
  const auto one = hv::optimal_eps_agent(1);
  CHECK(one.degenerate);
  CHECK(one.eps.exact == Rat(1));
  CHECK(hv::optimal_eps_agent(2).eps.exact == Rat(1, 2));
  CHECK(std::abs(hv::optimal_eps_agent(3).eps.value - 1.0 / std::sqrt(3.0)) <= 1e-14);
  for (int i = 2; i <= 8; ++i) {
    const auto num = hv::maximize_concave(
        [i](double e) { return hv::ternary_value_i(Rat::from_double(e), i); }, 1e-10);
    const auto o = hv::optimal_eps_agent(i);
    CHECK(std::abs(num.argmax - o.eps.value) <= 1e-8);
    // First-order condition: 1 - i eps^(i-1) = 0.
    CHECK(std::abs(1.0 - i * std::pow(o.eps.value, i - 1)) <= 1e-12);
  }
  // (1/i)^(i-1) is not a maximizer beyond i = 2.
  CHECK(hv::ternary_value_i(Rat(1, 9), 3) < hv::ternary_value_i(Rat::from_double(0.57735), 3));
}

TEST_CASE("social-optimal noise level") {
  const auto e = hv::optimal_eps_social(Rat(3, 4));
  CHECK(std::abs(e.value - 2.0 / 3.0) <= 1e-15);
  CHECK(std::abs(hv::optimal_eps_social(Rat(1, 1000000)).value - 0.5) <= 1e-6);
  CHECK(std::abs(hv::optimal_eps_social(Rat(1, 2)).value - (2.0 - std::sqrt(2.0))) <= 1e-15);
  double prev = 0.0;
  for (int k = 1; k <= 19; ++k) {
    const double v = hv::optimal_eps_social(Rat(k, 20)).value;
    CHECK(prev < v);
    prev = v;
  }
  for (const Rat d : {Rat(1, 10), Rat(1, 2), Rat(9, 10)}) {
    const double dd = d.to_double();
    const double r = std::sqrt(1.0 - dd);
    CHECK(std::abs(hv::max_ternary_social_value(d).value - 0.25 * (1 - r) * (1 - r) / dd) <= 1e-15);
  }
  CHECK(std::abs(hv::max_ternary_social_value(Rat(999999, 1000000)).value - 0.25) <= 1e-3);
}

TEST_CASE("dominance of the ternary split") {
  const auto sym = hv::verify_dominance(oracle::symmetric(Rat(2, 3)), 3);
  CHECK(sym.history_original[1] == Rat(0));
  CHECK(sym.history_split[1] == Rat(1, 18));
  CHECK(sym.two_sided);
  CHECK(sym.strict_for_later_agents);
  CHECK(sym.verdict());

  const auto t = hv::verify_dominance(oracle::ternary(Rat(2, 5)), 5);
  CHECK(t.history_original == t.history_split);
  CHECK(t.verdict());
  CHECK_FALSE(t.two_sided);

  const auto one_sided = hv::verify_dominance(quarter_one_sided(), 4);
  CHECK(one_sided.history_original == one_sided.history_split);
  CHECK(one_sided.verdict());

  for (const auto& pi : corpus(43, 25)) {
    const auto r = hv::verify_dominance(pi, 6);
    CHECK(r.verdict());
    CHECK(r.sandwich);
    if (r.two_sided) CHECK(r.strict_for_later_agents);
  }
}

TEST_CASE("one-sided corpus gives equalities") {
  hv::CorpusOptions opt;
  opt.seed = 47;
  opt.size = 30;
  opt.kind = hv::CorpusKind::OneSided;
  for (const auto& pi : hv::generate_corpus(opt)) {
    const auto r = hv::verify_dominance(pi, 5);
    CHECK(r.history_original == r.history_split);
    CHECK(hv::check_equivalence(pi, r.split, 5).equivalent);
  }
}

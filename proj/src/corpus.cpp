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

#include "hv/corpus.hpp"

#include <algorithm>

#include "hv/errors.hpp"

namespace hv {

namespace {

// Uniform in [lo, hi]; modulo bias is irrelevant at these ranges.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<int> composition(std::mt19937_64& rng, int total, int parts) {
  std::vector<int> cuts;
  cuts.reserve(static_cast<std::size_t>(parts) + 1);
  cuts.push_back(0);
  for (int k = 1; k < parts; ++k) cuts.push_back(draw(rng, 0, total));
  cuts.push_back(total);
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out;
  for (int k = 0; k < parts; ++k) out.push_back(cuts[k + 1] - cuts[k]);
  return out;
}

void check_options(int max_signals, int max_denominator) {
  if (max_signals < 2) throw InvalidParameter("corpus needs max_signals >= 2");
  if (max_denominator < 1) throw InvalidParameter("corpus needs max_denominator >= 1");
}

std::string signal_id(int k) { return "s" + std::to_string(k + 1); }

}  // namespace

InformationStructure random_structure(std::mt19937_64& rng, int max_signals, int max_denominator) {
  check_options(max_signals, max_denominator);
  const int n = draw(rng, 2, max_signals);
  const int dh = draw(rng, 1, max_denominator);
  const int dl = draw(rng, 1, max_denominator);
  const auto h = composition(rng, dh, n);
  const auto l = composition(rng, dl, n);
  std::vector<Signal> s;
  for (int k = 0; k < n; ++k) {
    s.push_back(Signal{signal_id(k), Rat(h[static_cast<std::size_t>(k)], dh),
                       Rat(l[static_cast<std::size_t>(k)], dl)});
  }
  return InformationStructure::validate(std::move(s));
}

InformationStructure random_one_sided_structure(std::mt19937_64& rng, int max_signals,
                                                int max_denominator) {
  check_options(max_signals, max_denominator);
  const int interior = draw(rng, 1, max_signals - 1);
  const int d = draw(rng, 1, max_denominator);
  const auto l = composition(rng, d, interior);
  std::vector<Signal> s;
  Rat used;
  for (int k = 0; k < interior; ++k) {
    const int lk = l[static_cast<std::size_t>(k)];
    const Rat ph(draw(rng, 0, lk), d);
    used += ph;
    s.push_back(Signal{signal_id(k), ph, Rat(lk, d)});
  }
  s.push_back(Signal{signal_id(interior), Rat(1) - used, Rat(0)});
  if (rng() & 1u) {
    for (auto& sig : s) std::swap(sig.like_h, sig.like_l);
  }
  return InformationStructure::validate(std::move(s));
}

std::vector<InformationStructure> generate_corpus(const CorpusOptions& options) {
  if (options.size < 0) throw InvalidParameter("corpus size must be >= 0");
  std::mt19937_64 rng(options.seed);
  std::vector<InformationStructure> out;
  out.reserve(static_cast<std::size_t>(options.size));
  for (int k = 0; k < options.size; ++k) {
    out.push_back(options.kind == CorpusKind::Random
                      ? random_structure(rng, options.max_signals, options.max_denominator)
                      : random_one_sided_structure(rng, options.max_signals,
                                                   options.max_denominator));
  }
  return out;
}

}  // namespace hv

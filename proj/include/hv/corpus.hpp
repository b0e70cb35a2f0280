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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hv/belief.hpp"

namespace hv {

enum class CorpusKind {
  Random,     // arbitrary small-denominator structures
  OneSided,   // interior beliefs all on one side of 1/2
};

struct CorpusOptions {
  std::uint64_t seed = 0;
  int size = 100;
  int max_signals = 4;
  int max_denominator = 12;
  CorpusKind kind = CorpusKind::Random;
};

/// Each likelihood column is a random composition of a denominator
/// d <= max_denominator into 2..max_signals parts.
InformationStructure random_structure(std::mt19937_64& rng, int max_signals, int max_denominator);

/// Interior beliefs all <= 1/2 plus a conclusive-high signal, or the mirror
/// image, chosen at random.
InformationStructure random_one_sided_structure(std::mt19937_64& rng, int max_signals,
                                                int max_denominator);

/// Deterministic given the options (the generator avoids
/// implementation-defined standard distributions).
std::vector<InformationStructure> generate_corpus(const CorpusOptions& options);

}  // namespace hv

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

// File formats. Rationals are always written as "num/den" strings next to a
// 12-significant-digit decimal where a decimal is useful.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "hv/belief.hpp"
#include "hv/info_design.hpp"
#include "hv/learning.hpp"
#include "hv/market.hpp"

namespace hv {

using Json = nlohmann::ordered_json;

/// {"signals": [{"id": "s1", "pH": "2/3", "pL": "1/3"}, ...]}
InformationStructure structure_from_json(const Json& j);
Json structure_to_json(const InformationStructure& pi);

/// Canonical text: two-space indent and a trailing newline. Reading a
/// canonical file and writing it back reproduces it byte for byte.
std::string structure_to_text(const InformationStructure& pi);
InformationStructure structure_from_text(const std::string& text);
InformationStructure read_structure_file(const std::filesystem::path& path);

Rat rat_from_json(const Json& j, const std::string& what);

Json exact_json(const Rat& r);
Json estimate_json(const RealEstimate& e);

Json profile_json(const PayoffProfile& p);
/// Columns i, V_i, Vbar_i, hist_value_i, each followed by a decimal column.
std::string profile_csv(const PayoffProfile& p);

Json price_schedule_json(const PriceSchedule& s);
/// Columns i, price, price_decimal.
std::string price_schedule_csv(const PriceSchedule& s);

Json surplus_json(const SurplusReport& r);

Json dominance_json(const DominanceReport& r);
/// Long format, one row per (structure, agent); a comment header records
/// the corpus seed.
std::string dominance_csv(const std::vector<DominanceReport>& reports, std::uint64_t seed);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hv

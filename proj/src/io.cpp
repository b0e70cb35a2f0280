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

#include "hv/io.hpp"

#include <fstream>
#include <sstream>

#include "hv/errors.hpp"

namespace hv {

Rat rat_from_json(const Json& j, const std::string& what) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError(what + " must be a \"num/den\" string or an integer");
}

InformationStructure structure_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("signals") || !j["signals"].is_array()) {
    throw ParseError("structure must be an object with a \"signals\" array");
  }
  std::vector<Signal> signals;
  for (const auto& s : j["signals"]) {
    if (!s.is_object() || !s.contains("id") || !s.contains("pH") || !s.contains("pL") ||
        !s["id"].is_string()) {
      throw ParseError("each signal needs string \"id\", \"pH\" and \"pL\"");
    }
    const std::string id = s["id"].get<std::string>();
    signals.push_back(Signal{id, rat_from_json(s["pH"], "pH of " + id),
                             rat_from_json(s["pL"], "pL of " + id)});
  }
  return InformationStructure::validate(std::move(signals));
}

Json structure_to_json(const InformationStructure& pi) {
  Json arr = Json::array();
  for (const auto& s : pi.signals()) {
    arr.push_back(Json{{"id", s.id}, {"pH", s.like_h.str()}, {"pL", s.like_l.str()}});
  }
  return Json{{"signals", std::move(arr)}};
}

std::string structure_to_text(const InformationStructure& pi) {
  return structure_to_json(pi).dump(2) + "\n";
}

InformationStructure structure_from_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return structure_from_json(j);
}

InformationStructure read_structure_file(const std::filesystem::path& path) {
  return structure_from_text(read_text_file(path));
}

Json exact_json(const Rat& r) { return Json{{"exact", r.str()}, {"decimal", r.decimal()}}; }

Json estimate_json(const RealEstimate& e) {
  Json j{{"value", format_decimal(e.value)}, {"bound", format_decimal(e.bound)}};
  if (e.exact) j["exact"] = e.exact->str();
  return j;
}

Json profile_json(const PayoffProfile& p) {
  Json agents = Json::array();
  for (int i = 1; i <= p.horizon(); ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    Json row{{"i", i}, {"V_i", exact_json(p.equilibrium[k])}};
    row["Vbar_i"] = k < p.full_observation.size() ? exact_json(p.full_observation[k]) : Json();
    row["hist_value_i"] = exact_json(p.history_value[k]);
    agents.push_back(std::move(row));
  }
  return Json{{"V", exact_json(p.single_signal)}, {"agents", std::move(agents)}};
}

std::string profile_csv(const PayoffProfile& p) {
  std::ostringstream os;
  os << "i,V_i,V_i_decimal,Vbar_i,Vbar_i_decimal,hist_value_i,hist_value_i_decimal\n";
  for (int i = 1; i <= p.horizon(); ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    os << i << ',' << p.equilibrium[k] << ',' << p.equilibrium[k].decimal() << ',';
    if (k < p.full_observation.size()) {
      os << p.full_observation[k] << ',' << p.full_observation[k].decimal();
    } else {
      os << ',';
    }
    os << ',' << p.history_value[k] << ',' << p.history_value[k].decimal() << '\n';
  }
  return os.str();
}

Json price_schedule_json(const PriceSchedule& s) {
  Json prices = Json::array();
  for (std::size_t k = 0; k < s.prices.size(); ++k) {
    prices.push_back(Json{{"i", k + 1},
                          {"price", exact_json(s.prices[k])},
                          {"willingness", exact_json(s.willingness[k])}});
  }
  return Json{{"regime", to_string(s.regime)},
              {"t", s.t},
              {"participation", s.participation()},
              {"prices", std::move(prices)}};
}

std::string price_schedule_csv(const PriceSchedule& s) {
  std::ostringstream os;
  os << "i,price,price_decimal\n";
  for (std::size_t k = 0; k < s.prices.size(); ++k) {
    os << k + 1 << ',' << s.prices[k] << ',' << s.prices[k].decimal() << '\n';
  }
  return os.str();
}

Json surplus_json(const SurplusReport& r) {
  return Json{{"regime", to_string(r.regime)},
              {"t", r.t},
              {"horizon", r.horizon},
              {"participation", r.participation},
              {"seller", exact_json(r.seller)},
              {"seller_bound", exact_json(r.seller_bound)},
              {"buyer", exact_json(r.buyer)},
              {"buyer_bound", exact_json(r.buyer_bound)},
              {"social", exact_json(r.social)},
              {"social_bound", exact_json(r.social_bound)}};
}

Json dominance_json(const DominanceReport& r) {
  Json agents = Json::array();
  for (std::size_t k = 0; k < r.history_original.size(); ++k) {
    Json row{{"i", k + 1},
             {"hist_value", exact_json(r.history_original[k])},
             {"hist_value_split", exact_json(r.history_split[k])},
             {"V_i", exact_json(r.equilibrium_original[k])}};
    row["Vbar_i"] = k < r.benchmark_original.size() ? exact_json(r.benchmark_original[k]) : Json();
    agents.push_back(std::move(row));
  }
  return Json{{"split_eps", exact_json(r.split_eps)},
              {"V", exact_json(r.v_original)},
              {"V_split", exact_json(r.v_split)},
              {"two_sided", r.two_sided},
              {"v_preserved", r.v_preserved},
              {"weakly_dominates", r.weakly_dominates},
              {"strict_for_later_agents", r.strict_for_later_agents},
              {"sandwich", r.sandwich},
              {"verdict", r.verdict()},
              {"agents", std::move(agents)}};
}

std::string dominance_csv(const std::vector<DominanceReport>& reports, std::uint64_t seed) {
  std::ostringstream os;
  os << "# seed=" << seed << " structures=" << reports.size() << '\n';
  os << "structure,i,split_eps,V,V_split,hist_value,hist_value_split,hist_value_decimal,"
        "hist_value_split_decimal,verdict\n";
  for (std::size_t s = 0; s < reports.size(); ++s) {
    const auto& r = reports[s];
    for (std::size_t k = 0; k < r.history_original.size(); ++k) {
      os << s << ',' << k + 1 << ',' << r.split_eps << ',' << r.v_original << ',' << r.v_split
         << ',' << r.history_original[k] << ',' << r.history_split[k] << ','
         << r.history_original[k].decimal() << ',' << r.history_split[k].decimal() << ','
         << (r.verdict() ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidParameter("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace hv

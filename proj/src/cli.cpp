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

#include "hv/cli.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "hv/errors.hpp"
#include "hv/info_design.hpp"
#include "hv/market.hpp"

namespace hv {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{"structure", "structure_file", "params", "horizon",
                                          "tolerance", "seed",           "format", "corpus",
                                          "sweep",     "limits"};
  return keys;
}

int int_field(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return j[key].get<int>();
}

Rat tolerance_from_json(const Json& j) {
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  if (j.is_number()) return Rat::parse(j.dump());
  throw ParseError("\"tolerance\" must be a number or a string");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ParseError("unknown format '" + s + "' (expected json or csv)");
}

std::vector<Rat> rat_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<Rat> out;
  for (const auto& x : j) out.push_back(rat_from_json(x, what));
  return out;
}

const InformationStructure& need_structure(const RunConfig& c) {
  if (!c.structure) throw ParseError(std::string(to_string(c.command)) + " needs a structure");
  return *c.structure;
}

const Rat& need_delta(const RunConfig& c) {
  if (!c.delta) throw ParseError(std::string(to_string(c.command)) + " needs params.delta");
  return *c.delta;
}

const Rat& need_alpha(const RunConfig& c) {
  if (!c.alpha) throw ParseError(std::string(to_string(c.command)) + " needs params.alpha");
  return *c.alpha;
}

// Evaluates f(k) for k in [0, n) on a few threads; results keep index order.
template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(n, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<R>>> futures;
  for (std::size_t w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w] {
      std::vector<R> part;
      for (std::size_t k = w; k < n; k += workers) part.push_back(f(k));
      return part;
    }));
  }
  std::vector<std::vector<R>> parts;
  for (auto& fu : futures) parts.push_back(fu.get());
  std::vector<R> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(std::move(parts[k % workers][k / workers]));
  return out;
}

}  // namespace

const char* to_string(Command c) noexcept {
  switch (c) {
    case Command::Value: return "value";
    case Command::Design: return "design";
    case Command::Market: return "market";
    case Command::Verify: return "verify";
    case Command::Sweep: return "sweep";
  }
  return "value";
}

Json RunConfig::echo() const {
  Json j{{"command", to_string(command)}};
  if (structure) {
    j["structure_source"] = structure_source;
    j["structure"] = structure_to_json(*structure);
  }
  Json params = Json::object();
  if (delta) params["delta"] = delta->str();
  if (alpha) params["alpha"] = alpha->str();
  params["t"] = t;
  j["params"] = std::move(params);
  j["horizon"] = horizon;
  j["tolerance"] = tolerance.str();
  j["seed"] = seed;
  j["format"] = format == OutputFormat::Json ? "json" : "csv";
  if (command == Command::Verify && !structure) {
    j["corpus"] = Json{{"size", corpus.size},
                       {"kind", corpus.kind == CorpusKind::Random ? "random" : "one-sided"},
                       {"max_signals", corpus.max_signals},
                       {"max_denominator", corpus.max_denominator}};
  }
  if (command == Command::Sweep) {
    Json d = Json::array(), a = Json::array();
    for (const auto& x : sweep.deltas) d.push_back(x.str());
    for (const auto& x : sweep.alphas) a.push_back(x.str());
    j["sweep"] = Json{{"deltas", d}, {"alphas", a}, {"ts", sweep.ts}};
  }
  return j;
}

RunConfig parse_run_config(Command command, const Json& config, const Overrides& overrides,
                           const std::filesystem::path& base_dir) {
  if (!config.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [key, value] : config.items()) {
    if (!known_keys().count(key)) throw ParseError("unknown config key \"" + key + "\"");
  }

  RunConfig c;
  c.command = command;
  c.format = command == Command::Sweep ? OutputFormat::Csv : OutputFormat::Json;

  const bool inline_structure = config.contains("structure");
  const bool file_structure = config.contains("structure_file");
  if (inline_structure && file_structure) {
    throw ParseError("give exactly one of \"structure\" and \"structure_file\"");
  }
  if (inline_structure) {
    c.structure = structure_from_json(config["structure"]);
    c.structure_source = "inline";
  } else if (file_structure) {
    if (!config["structure_file"].is_string()) throw ParseError("\"structure_file\" must be a string");
    const std::string rel = config["structure_file"].get<std::string>();
    std::filesystem::path p(rel);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    c.structure = read_structure_file(p);
    c.structure_source = rel;
  }

  if (config.contains("params")) {
    const Json& p = config["params"];
    if (!p.is_object()) throw ParseError("\"params\" must be an object");
    if (p.contains("delta")) {
      c.delta = rat_from_json(p["delta"], "params.delta");
      require_discount(*c.delta);
    }
    if (p.contains("alpha")) {
      c.alpha = rat_from_json(p["alpha"], "params.alpha");
      if (c.alpha->sign() <= 0 || *c.alpha >= Rat(1)) {
        throw InvalidParameter("params.alpha must lie in (0,1)");
      }
    }
    c.t = int_field(p, "t", 1);
    if (c.t < 1) throw InvalidParameter("params.t must be >= 1");
  }

  c.horizon = int_field(config, "horizon", c.horizon);
  if (config.contains("tolerance")) c.tolerance = tolerance_from_json(config["tolerance"]);
  if (config.contains("seed")) {
    if (!config["seed"].is_number_unsigned()) throw ParseError("\"seed\" must be a non-negative integer");
    c.seed = config["seed"].get<std::uint64_t>();
  }
  if (config.contains("format")) {
    if (!config["format"].is_string()) throw ParseError("\"format\" must be a string");
    c.format = parse_format(config["format"].get<std::string>());
  }

  if (config.contains("corpus")) {
    const Json& k = config["corpus"];
    if (!k.is_object()) throw ParseError("\"corpus\" must be an object");
    c.corpus.size = int_field(k, "size", c.corpus.size);
    c.corpus.max_signals = int_field(k, "max_signals", c.corpus.max_signals);
    c.corpus.max_denominator = int_field(k, "max_denominator", c.corpus.max_denominator);
    if (k.contains("kind")) {
      const std::string kind = k["kind"].is_string() ? k["kind"].get<std::string>() : "";
      if (kind == "random") {
        c.corpus.kind = CorpusKind::Random;
      } else if (kind == "one-sided") {
        c.corpus.kind = CorpusKind::OneSided;
      } else {
        throw ParseError("corpus.kind must be \"random\" or \"one-sided\"");
      }
    }
  }

  if (config.contains("sweep")) {
    const Json& s = config["sweep"];
    if (!s.is_object()) throw ParseError("\"sweep\" must be an object");
    if (s.contains("deltas")) c.sweep.deltas = rat_list(s["deltas"], "sweep.deltas");
    if (s.contains("alphas")) c.sweep.alphas = rat_list(s["alphas"], "sweep.alphas");
    if (s.contains("ts")) {
      if (!s["ts"].is_array()) throw ParseError("sweep.ts must be an array");
      for (const auto& x : s["ts"]) {
        if (!x.is_number_integer()) throw ParseError("sweep.ts entries must be integers");
        c.sweep.ts.push_back(x.get<int>());
      }
    }
  }
  if (command == Command::Sweep) {
    if (c.sweep.deltas.empty()) throw ParseError("sweep needs sweep.deltas");
    if (c.sweep.alphas.empty()) c.sweep.alphas.push_back(c.alpha.value_or(half()));
    if (c.sweep.ts.empty()) c.sweep.ts.push_back(c.t);
  }

  if (config.contains("limits")) {
    const Json& l = config["limits"];
    if (!l.is_object()) throw ParseError("\"limits\" must be an object");
    auto& lim = c.engine.limits;
    lim.horizon_cap = int_field(l, "horizon_cap", lim.horizon_cap);
    lim.lexicographic_cap = int_field(l, "lexicographic_cap", lim.lexicographic_cap);
    lim.iid_cap = int_field(l, "iid_cap", lim.iid_cap);
    lim.max_indifference_nodes = static_cast<std::size_t>(
        int_field(l, "max_indifference_nodes", static_cast<int>(lim.max_indifference_nodes)));
    c.engine.horizon_cap = int_field(l, "social_horizon_cap", c.engine.horizon_cap);
  }

  if (overrides.out) c.out = *overrides.out;
  if (overrides.seed) c.seed = *overrides.seed;
  if (overrides.horizon) c.horizon = *overrides.horizon;
  if (overrides.tolerance) c.tolerance = Rat::parse(*overrides.tolerance);
  if (overrides.format) c.format = parse_format(*overrides.format);
  c.corpus.seed = c.seed;

  if (c.horizon < 1) throw InvalidParameter("horizon must be >= 1");
  if (c.tolerance.sign() <= 0) throw InvalidParameter("tolerance must be positive");
  return c;
}

Json run_value(const RunConfig& config) {
  const auto& pi = need_structure(config);
  const Rat& delta = need_delta(config);
  const auto sel = best_equilibrium_payoffs(pi, config.horizon, config.engine.limits);
  const auto social = social_value(pi, delta, config.tolerance, config.engine);

  Json results = profile_json(sel.profile);
  results["indifference_nodes"] = sel.indifference_nodes;
  results["social_value"] = Json{{"delta", exact_json(delta)},
                                 {"value", exact_json(social.partial)},
                                 {"error_bound", exact_json(social.error_bound)},
                                 {"interval", Json::array({social.partial.str(),
                                                           (social.partial + social.error_bound).str()})},
                                 {"horizon", social.horizon}};
  return Json{{"command", "value"}, {"config", config.echo()}, {"results", std::move(results)}};
}

Json run_design(const RunConfig& config) {
  const auto& pi = need_structure(config);
  const auto report = verify_dominance(pi, config.horizon, config.engine.limits);
  const auto equivalence = check_equivalence(pi, report.split, 0);

  Json optima = Json::array();
  for (int i = 1; i <= config.horizon; ++i) {
    const auto o = optimal_eps_agent(i);
    optima.push_back(Json{{"i", i}, {"eps", estimate_json(o.eps)}, {"degenerate", o.degenerate}});
  }
  Json results{{"split", structure_to_json(report.split)},
               {"split_eps", exact_json(report.split_eps)},
               {"equivalent_to_split", equivalence.equivalent},
               {"equivalence_witness", to_string(equivalence.witness)},
               {"dominance", dominance_json(report)},
               {"agent_optima", std::move(optima)}};
  if (config.delta) {
    results["social_optimum"] = Json{{"delta", exact_json(*config.delta)},
                                     {"eps", estimate_json(optimal_eps_social(*config.delta))},
                                     {"max_value", estimate_json(max_ternary_social_value(*config.delta))}};
  }
  return Json{{"command", "design"}, {"config", config.echo()}, {"results", std::move(results)}};
}

Json run_market(const RunConfig& config) {
  const auto& pi = need_structure(config);
  const MarketParams params = MarketParams::make(need_delta(config), need_alpha(config), config.t);
  const MarketParams dynamic_params = MarketParams::make(params.delta, params.alpha, 1);

  const auto dynamic = dynamic_price_path(pi, config.horizon, config.engine.limits);
  const auto sticky = sticky_price_path(pi, params.t, config.horizon, config.engine.limits);
  const auto dyn_surplus = surpluses(pi, dynamic_params, config.tolerance, config.engine);
  const auto sticky_surplus = sticky_surpluses(pi, params, config.tolerance, config.engine);
  const auto weighted = optimal_eps_weighted(params.delta, params.alpha);
  const auto weighted_sticky = optimal_eps_weighted_sticky(params, config.tolerance.to_double());

  Json optima{{"seller", estimate_json(optimal_eps_seller(params.delta))},
              {"buyer", exact_json(optimal_eps_buyer())},
              {"weighted", Json{{"eps", estimate_json(weighted.eps)},
                                {"interior", weighted.interior},
                                {"threshold", exact_json(weighted.threshold)}}},
              {"seller_sticky", estimate_json(optimal_eps_seller_sticky(params.delta, params.t))},
              {"weighted_sticky", Json{{"eps", estimate_json(weighted_sticky.eps)},
                                       {"numeric_only", weighted_sticky.numeric_only}}}};
  Json results{{"dynamic_prices", price_schedule_json(dynamic)},
               {"sticky_prices", price_schedule_json(sticky)},
               {"surpluses", surplus_json(dyn_surplus)},
               {"sticky_surpluses", surplus_json(sticky_surplus)},
               {"optima", std::move(optima)}};
  return Json{{"command", "market"}, {"config", config.echo()}, {"results", std::move(results)}};
}

VerifyOutcome run_verify(const RunConfig& config) {
  std::vector<InformationStructure> structures;
  if (config.structure) {
    structures.push_back(*config.structure);
  } else {
    structures = generate_corpus(config.corpus);
  }

  struct Entry {
    DominanceReport report;
    EquivalenceWitness witness;
    bool pass;
  };
  const auto entries = parallel_map(structures.size(), [&](std::size_t k) {
    auto r = verify_dominance(structures[k], config.horizon, config.engine.limits);
    const auto eq = check_equivalence(structures[k], r.split, 0);
    const bool pass = r.verdict() && r.sandwich && (!r.two_sided || r.strict_for_later_agents);
    return Entry{std::move(r), eq.witness, pass};
  });

  VerifyOutcome out;
  out.all_passed = true;
  Json rows = Json::array();
  Json failures = Json::array();
  std::size_t equalities = 0, strict_checked = 0, passed = 0;
  std::vector<DominanceReport> reports;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    const bool equal = e.report.history_original == e.report.history_split;
    equalities += equal ? 1 : 0;
    strict_checked += e.report.two_sided ? 1 : 0;
    passed += e.pass ? 1 : 0;
    out.all_passed = out.all_passed && e.pass;
    Json row{{"index", k},
             {"pass", e.pass},
             {"two_sided", e.report.two_sided},
             {"equal_values", equal},
             {"equivalence_witness", to_string(e.witness)},
             {"dominance", dominance_json(e.report)}};
    rows.push_back(std::move(row));
    if (!e.pass) {
      failures.push_back(Json{{"index", k}, {"structure", structure_to_json(structures[k])}});
    }
    reports.push_back(e.report);
  }
  out.report = Json{{"command", "verify"},
                    {"config", config.echo()},
                    {"seed", config.seed},
                    {"summary", Json{{"structures", entries.size()},
                                     {"passed", passed},
                                     {"failed", entries.size() - passed},
                                     {"strictness_checked", strict_checked},
                                     {"equalities", equalities}}},
                    {"verdict", out.all_passed},
                    {"failures", std::move(failures)},
                    {"structures", std::move(rows)}};
  out.csv = dominance_csv(reports, config.seed);
  return out;
}

std::string run_sweep(const RunConfig& config) {
  struct Point {
    Rat delta, alpha;
    int t;
  };
  std::vector<Point> grid;
  for (int t : config.sweep.ts) {
    for (const auto& a : config.sweep.alphas) {
      for (const auto& d : config.sweep.deltas) grid.push_back(Point{d, a, t});
    }
  }
  struct Row {
    Point p;
    RealEstimate eps_s;
    RealEstimate eps_star;
    std::string method;
    Rat seller, buyer, social, seller_at_eps_s;
  };
  const double tol = config.tolerance.to_double();
  const auto rows = parallel_map(grid.size(), [&](std::size_t k) {
    const Point& pt = grid[k];
    const MarketParams params = MarketParams::make(pt.delta, pt.alpha, pt.t);
    Row r{pt, optimal_eps_seller_sticky(pt.delta, pt.t), {}, {}, {}, {}, {}, {}};
    if (pt.t == 1) {
      const auto w = optimal_eps_weighted(pt.delta, pt.alpha);
      r.eps_star = w.eps;
      r.method = w.interior ? "closed-form" : "boundary";
    } else {
      const auto w = optimal_eps_weighted_sticky(params, tol);
      r.eps_star = w.eps;
      r.method = w.numeric_only ? "numeric" : "boundary";
    }
    const Rat eps = r.eps_star.exact ? *r.eps_star.exact : Rat::from_double(r.eps_star.value);
    r.seller = ternary_sticky_seller_value(eps, pt.delta, pt.t);
    r.buyer = ternary_sticky_buyer_value(eps, pt.delta, pt.t);
    r.social = pt.alpha * r.buyer + (Rat(1) - pt.alpha) * r.seller;
    r.seller_at_eps_s = ternary_sticky_seller_value(Rat::from_double(r.eps_s.value), pt.delta, pt.t);
    return r;
  });

  std::ostringstream os;
  os << "# hv sweep; surpluses are exact at the reported eps_star, which is within eps_star_bound "
        "of the optimum\n";
  os << "# tolerance=" << config.tolerance.str() << '\n';
  os << "delta,alpha,t,eps_star_B,eps_star_S,eps_star_S_bound,eps_star,eps_star_bound,"
        "eps_star_method,seller,buyer,social,seller_at_eps_star_S\n";
  for (const auto& r : rows) {
    os << r.p.delta.decimal() << ',' << r.p.alpha.decimal() << ',' << r.p.t << ','
       << optimal_eps_buyer().decimal() << ',' << format_decimal(r.eps_s.value) << ','
       << format_decimal(r.eps_s.bound) << ',' << format_decimal(r.eps_star.value) << ','
       << format_decimal(r.eps_star.bound) << ',' << r.method << ',' << r.seller.decimal() << ','
       << r.buyer.decimal() << ',' << r.social.decimal() << ',' << r.seller_at_eps_s.decimal()
       << '\n';
  }

  // Comparative statics.
  bool all_increasing = true, all_threshold = true, all_sticky = true;
  std::map<std::pair<int, Rat>, std::vector<const Row*>> by_t_alpha;
  std::map<std::pair<Rat, Rat>, std::vector<const Row*>> by_delta_alpha;
  for (const auto& r : rows) {
    by_t_alpha[{r.p.t, r.p.alpha}].push_back(&r);
    by_delta_alpha[{r.p.delta, r.p.alpha}].push_back(&r);
  }
  for (auto& [key, group] : by_t_alpha) {
    std::sort(group.begin(), group.end(), [](const Row* a, const Row* b) { return a->p.delta < b->p.delta; });
    bool inc = true;
    for (std::size_t k = 1; k < group.size(); ++k) {
      if (!(group[k - 1]->eps_s.value < group[k]->eps_s.value)) inc = false;
    }
    all_increasing = all_increasing && inc;
    os << "# eps_star_S strictly increasing in delta (t=" << key.first
       << ", alpha=" << key.second.decimal() << "): " << (inc ? "true" : "false") << '\n';
    if (key.first == 1) {
      bool ok = true;
      const Rat threshold = key.second / (Rat(1) - key.second);
      for (const Row* r : group) {
        const bool zero = r->eps_star.value == 0.0;
        if (zero != (r->p.delta <= threshold)) ok = false;
      }
      all_threshold = all_threshold && ok;
      os << "# eps_star = 0 exactly when delta <= alpha/(1-alpha) (alpha=" << key.second.decimal()
         << "): " << (ok ? "true" : "false") << '\n';
    }
  }
  for (auto& [key, group] : by_delta_alpha) {
    if (group.size() < 2) continue;
    std::sort(group.begin(), group.end(), [](const Row* a, const Row* b) { return a->p.t < b->p.t; });
    bool noninc = true;
    for (std::size_t k = 1; k < group.size(); ++k) {
      if (group[k - 1]->seller_at_eps_s < group[k]->seller_at_eps_s) noninc = false;
    }
    all_sticky = all_sticky && noninc;
    os << "# optimal seller surplus nonincreasing in t (delta=" << key.first.decimal()
       << ", alpha=" << key.second.decimal() << "): " << (noninc ? "true" : "false") << '\n';
  }
  os << "# summary: eps_star_S_increasing=" << (all_increasing ? "true" : "false")
     << " threshold_consistent=" << (all_threshold ? "true" : "false")
     << " seller_nonincreasing_in_t=" << (all_sticky ? "true" : "false") << '\n';
  return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"hv: value of history in sequential social learning"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides ov;
  std::string out_path, tol, format;
  std::uint64_t seed = 0;
  int horizon = 0;

  const std::vector<std::pair<Command, const char*>> commands{
      {Command::Value, "per-agent payoffs, values of history and the social value"},
      {Command::Design, "ternary split, dominance check and optimal noise levels"},
      {Command::Market, "price paths, surpluses and optimal structures for the history market"},
      {Command::Verify, "check ternary dominance on a structure or a seeded corpus"},
      {Command::Sweep, "comparative statics over (delta, alpha, t) grids as CSV"}};
  std::map<CLI::App*, Command> by_app;
  std::vector<std::tuple<CLI::Option*, CLI::Option*, CLI::Option*, CLI::Option*, CLI::Option*>> opts;
  for (const auto& [cmd, desc] : commands) {
    CLI::App* sub = app.add_subcommand(to_string(cmd), desc);
    sub->add_option("--config", config_path, "JSON config file")->required();
    auto* o_out = sub->add_option("--out", out_path, "write the report here instead of stdout");
    auto* o_seed = sub->add_option("--seed", seed, "corpus seed");
    auto* o_h = sub->add_option("--horizon", horizon, "number of agents N")->check(CLI::PositiveNumber);
    auto* o_tol = sub->add_option("--tol", tol, "tolerance for truncated sums and searches");
    auto* o_fmt = sub->add_option("--format", format, "json or csv");
    by_app.emplace(sub, cmd);
    opts.emplace_back(o_out, o_seed, o_h, o_tol, o_fmt);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_code(ErrorClass::Parse);
  }

  try {
    Command cmd = Command::Value;
    std::size_t idx = 0;
    for (const auto& [sub, c] : by_app) {
      if (sub->parsed()) cmd = c;
    }
    for (std::size_t k = 0; k < commands.size(); ++k) {
      if (commands[k].first == cmd) idx = k;
    }
    const auto& [o_out, o_seed, o_h, o_tol, o_fmt] = opts[idx];
    if (o_out->count()) ov.out = out_path;
    if (o_seed->count()) ov.seed = seed;
    if (o_h->count()) ov.horizon = horizon;
    if (o_tol->count()) ov.tolerance = tol;
    if (o_fmt->count()) ov.format = format;

    const std::filesystem::path cfg(config_path);
    Json j;
    try {
      j = Json::parse(read_text_file(cfg));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("malformed config JSON: " + std::string(e.what()));
    }
    const RunConfig config = parse_run_config(cmd, j, ov, cfg.parent_path());

    std::string text;
    int status = 0;
    const bool csv = config.format == OutputFormat::Csv;
    switch (cmd) {
      case Command::Value:
        if (csv) {
          text = profile_csv(best_equilibrium_payoffs(need_structure(config), config.horizon,
                                                      config.engine.limits).profile);
        } else {
          text = run_value(config).dump(2) + "\n";
        }
        break;
      case Command::Design:
        text = run_design(config).dump(2) + "\n";
        break;
      case Command::Market:
        if (csv) {
          text = price_schedule_csv(sticky_price_path(need_structure(config), config.t,
                                                      config.horizon, config.engine.limits));
        } else {
          text = run_market(config).dump(2) + "\n";
        }
        break;
      case Command::Verify: {
        auto outcome = run_verify(config);
        text = csv ? outcome.csv : outcome.report.dump(2) + "\n";
        status = outcome.all_passed ? 0 : 1;
        break;
      }
      case Command::Sweep:
        text = run_sweep(config);
        break;
    }
    if (config.out.empty()) {
      out << text;
    } else {
      write_text_file(config.out, text);
    }
    return status;
  } catch (const Error& e) {
    err << "error [" << to_string(e.error_class()) << "] " << e.code() << ": " << e.what() << '\n';
    return exit_code(e.error_class());
  } catch (const nlohmann::json::exception& e) {
    err << "error [parse] ParseError: " << e.what() << '\n';
    return exit_code(ErrorClass::Parse);
  } catch (const std::exception& e) {
    err << "error [internal] " << e.what() << '\n';
    return exit_code(ErrorClass::Internal);
  }
}

}  // namespace hv

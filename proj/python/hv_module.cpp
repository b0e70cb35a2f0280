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

// Python bindings. Exact rationals cross the boundary as fractions.Fraction;
// inputs may be Fraction, int, or "num/den" strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <vector>

#include "hv/cli.hpp"
#include "hv/errors.hpp"
#include "hv/info_design.hpp"
#include "hv/io.hpp"
#include "hv/learning.hpp"
#include "hv/market.hpp"

namespace py = pybind11;

namespace {

hv::Rat to_rat(const py::handle& h) { return hv::Rat::parse(py::str(h).cast<std::string>()); }

py::object to_fraction(const hv::Rat& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(r.str());
}

py::list fractions(const std::vector<hv::Rat>& v) {
  py::list out;
  for (const auto& r : v) out.append(to_fraction(r));
  return out;
}

py::dict estimate(const hv::RealEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["bound"] = e.bound;
  d["exact"] = e.exact ? to_fraction(*e.exact) : py::none();
  return d;
}

hv::InformationStructure make_structure(const py::iterable& signals) {
  std::vector<hv::Signal> out;
  for (const auto& item : signals) {
    auto t = item.cast<py::sequence>();
    if (t.size() != 3) throw hv::ParseError("each signal is (id, pH, pL)");
    out.push_back(hv::Signal{py::str(t[0]).cast<std::string>(), to_rat(t[1]), to_rat(t[2])});
  }
  return hv::InformationStructure::validate(std::move(out));
}

py::dict profile_dict(const hv::PayoffProfile& p) {
  py::dict d;
  d["V"] = to_fraction(p.single_signal);
  d["V_i"] = fractions(p.equilibrium);
  d["Vbar_i"] = fractions(p.full_observation);
  d["hist_value_i"] = fractions(p.history_value);
  return d;
}

py::dict surplus_dict(const hv::SurplusReport& r) {
  py::dict d;
  d["seller"] = to_fraction(r.seller);
  d["buyer"] = to_fraction(r.buyer);
  d["social"] = to_fraction(r.social);
  d["seller_bound"] = to_fraction(r.seller_bound);
  d["buyer_bound"] = to_fraction(r.buyer_bound);
  d["social_bound"] = to_fraction(r.social_bound);
  d["regime"] = hv::to_string(r.regime);
  d["t"] = r.t;
  d["horizon"] = r.horizon;
  d["participation"] = r.participation;
  d["prices"] = fractions(r.schedule.prices);
  return d;
}

}  // namespace

PYBIND11_MODULE(hv, m) {
  m.doc() = "Value of history in sequential social learning: exact payoffs, ternary design, markets";

  static py::exception<hv::Error> base(m, "HvError", PyExc_ValueError);
  static py::exception<hv::ParseError> parse(m, "ParseError", base.ptr());
  static py::exception<hv::ValidationError> validation(m, "ValidationError", base.ptr());
  static py::exception<hv::CapExceeded> cap(m, "CapExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hv::ParseError& e) {
      py::set_error(parse, e.what());
    } catch (const hv::ValidationError& e) {
      py::set_error(validation, e.what());
    } catch (const hv::CapExceeded& e) {
      py::set_error(cap, e.what());
    } catch (const hv::Error& e) {
      py::set_error(base, e.what());
    }
  });

  py::class_<hv::InformationStructure>(m, "Structure")
      .def(py::init(&make_structure), py::arg("signals"),
           "Build from an iterable of (id, pH, pL).")
      .def_static("from_json", &hv::structure_from_text, py::arg("text"))
      .def("to_json", &hv::structure_to_text)
      .def("signals",
           [](const hv::InformationStructure& pi) {
             py::list out;
             for (const auto& s : pi.signals()) {
               out.append(py::make_tuple(s.id, to_fraction(s.like_h), to_fraction(s.like_l)));
             }
             return out;
           })
      .def("__len__", &hv::InformationStructure::size)
      .def("__eq__", [](const hv::InformationStructure& a, const hv::InformationStructure& b) {
        return a == b;
      })
      .def("__repr__", [](const hv::InformationStructure& pi) {
        std::ostringstream os;
        os << "Structure(" << hv::structure_to_json(pi).dump() << ")";
        return os.str();
      });

  m.def("belief_distribution", [](const hv::InformationStructure& pi) {
    py::list out;
    const auto dist = hv::induced_belief_distribution(pi);
    for (const auto& a : dist.atoms()) {
      out.append(py::make_tuple(to_fraction(a.belief.p_h()), to_fraction(a.mass())));
    }
    return out;
  }, py::arg("structure"), "Induced (belief, probability) pairs from the uniform prior.");

  m.def("compose_beliefs", [](const py::handle& a, const py::handle& b) {
    return to_fraction(hv::compose_beliefs(hv::Belief(to_rat(a)), hv::Belief(to_rat(b))).p_h());
  }, py::arg("a"), py::arg("b"));

  m.def("payoff_profile", [](const hv::InformationStructure& pi, int horizon) {
    return profile_dict(hv::best_equilibrium_payoffs(pi, horizon).profile);
  }, py::arg("structure"), py::arg("horizon"),
        "Per-agent payoffs under the best equilibrium, the full-observation benchmark, and the value of history.");

  m.def("social_value", [](const hv::InformationStructure& pi, const py::handle& delta,
                           const py::handle& tol) {
    const auto s = hv::social_value(pi, to_rat(delta), to_rat(tol));
    py::dict d;
    d["value"] = to_fraction(s.partial);
    d["error_bound"] = to_fraction(s.error_bound);
    d["horizon"] = s.horizon;
    return d;
  }, py::arg("structure"), py::arg("delta"), py::arg("tolerance") = "1/1000000");

  m.def("split", &hv::split_to_ternary, py::arg("structure"));
  m.def("ternary", [](const py::handle& eps) { return hv::TernaryStructure(to_rat(eps)).structure(); },
        py::arg("eps"));

  m.def("verify_dominance", [](const hv::InformationStructure& pi, int horizon) {
    const auto r = hv::verify_dominance(pi, horizon);
    py::dict d;
    d["split"] = r.split;
    d["split_eps"] = to_fraction(r.split_eps);
    d["V"] = to_fraction(r.v_original);
    d["V_split"] = to_fraction(r.v_split);
    d["hist_value"] = fractions(r.history_original);
    d["hist_value_split"] = fractions(r.history_split);
    d["two_sided"] = r.two_sided;
    d["weakly_dominates"] = r.weakly_dominates;
    d["strict_for_later_agents"] = r.strict_for_later_agents;
    d["sandwich"] = r.sandwich;
    d["verdict"] = r.verdict();
    return d;
  }, py::arg("structure"), py::arg("horizon"));

  m.def("optimal_eps_agent", [](int i) { return estimate(hv::optimal_eps_agent(i).eps); }, py::arg("i"));
  m.def("optimal_eps_social", [](const py::handle& delta) {
    return estimate(hv::optimal_eps_social(to_rat(delta)));
  }, py::arg("delta"));
  m.def("optimal_eps_seller_sticky", [](const py::handle& delta, int t) {
    return estimate(hv::optimal_eps_seller_sticky(to_rat(delta), t));
  }, py::arg("delta"), py::arg("t") = 1);
  m.def("optimal_eps_weighted", [](const py::handle& delta, const py::handle& alpha, int t,
                                   double tol) {
    const auto p = hv::MarketParams::make(to_rat(delta), to_rat(alpha), t);
    return estimate(hv::optimal_eps_weighted_sticky(p, tol).eps);
  }, py::arg("delta"), py::arg("alpha"), py::arg("t") = 1, py::arg("tolerance") = 1e-9);

  m.def("surpluses", [](const hv::InformationStructure& pi, const py::handle& delta,
                        const py::handle& alpha, int t, const py::handle& tol) {
    const auto p = hv::MarketParams::make(to_rat(delta), to_rat(alpha), t);
    return surplus_dict(hv::sticky_surpluses(pi, p, to_rat(tol)));
  }, py::arg("structure"), py::arg("delta"), py::arg("alpha"), py::arg("t") = 1,
        py::arg("tolerance") = "1/1000000");

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"hv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = hv::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line front end; returns (exit_code, stdout, stderr).");
}

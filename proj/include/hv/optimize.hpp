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

#include <cmath>
#include <optional>
#include <type_traits>
#include <vector>

#include "hv/errors.hpp"
#include "hv/rational.hpp"

namespace hv {

/// A real number known to lie within `bound` of `value`. `exact` is set when
/// the quantity is rational and known in closed form.
struct RealEstimate {
  double value = 0.0;
  double bound = 0.0;
  std::optional<Rat> exact;
};

struct ConcaveMaximum {
  double argmax = 0.0;
  double bound = 0.0;  // |argmax - true argmax| <= bound for unimodal f
  bool flat = false;   // every grid evaluation was equal
};

namespace detail {
inline void check_finite(double v, double x) {
  if (!std::isfinite(v)) throw NonFiniteEvaluation(x);
}
inline void check_finite(const Rat&, double) {}
}  // namespace detail

/// Grid bracketing followed by golden-section search on [0, 1].
///
/// f may return double or Rat. With Rat the comparisons are exact, so the
/// search is limited only by the resolution of the abscissae, which matters
/// for objectives too flat near their peak to separate in floating point.
template <class F>
ConcaveMaximum maximize_concave(F&& f, double tolerance, int grid = 64) {
  if (!(tolerance > 0.0)) throw InvalidParameter("tolerance must be positive");
  if (grid < 2) throw InvalidParameter("grid must have at least 2 intervals");
  using Value = std::decay_t<std::invoke_result_t<F&, double>>;

  const auto eval = [&](double x) {
    Value v = f(x);
    detail::check_finite(v, x);
    return v;
  };

  std::vector<Value> values;
  values.reserve(static_cast<std::size_t>(grid) + 1);
  int best = 0;
  bool flat = true;
  for (int k = 0; k <= grid; ++k) {
    values.push_back(eval(static_cast<double>(k) / grid));
    if (values[static_cast<std::size_t>(k)] != values.front()) flat = false;
    if (values[static_cast<std::size_t>(best)] < values[static_cast<std::size_t>(k)]) best = k;
  }
  if (flat) return ConcaveMaximum{0.5, 0.5, true};

  double a = best == 0 ? 0.0 : static_cast<double>(best - 1) / grid;
  double b = best == grid ? 1.0 : static_cast<double>(best + 1) / grid;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  Value fc = eval(c);
  Value fd = eval(d);
  for (int iter = 0; iter < 400 && b - a > tolerance; ++iter) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    }
  }
  // A peak at an end of [0, 1] is reported at the end itself.
  const double mid = (a + b) / 2.0;
  if (a == 0.0 && !(eval(0.0) < eval(mid))) return ConcaveMaximum{0.0, b, false};
  if (b == 1.0 && !(eval(1.0) < eval(mid))) return ConcaveMaximum{1.0, 1.0 - a, false};
  return ConcaveMaximum{mid, (b - a) / 2.0, false};
}

}  // namespace hv

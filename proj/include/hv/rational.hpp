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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hv {

/// Arbitrary-precision rational, always held in canonical reduced form
/// (positive denominator, gcd(|num|, den) = 1).
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT: implicit from integers is intended
  Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Exact value of a finite double (every double is a dyadic rational).
  static Rat from_double(double x);

  /// Accepts "n", "n/d", "0.35", "-1.5e-3". Result is reduced.
  static Rat parse(std::string_view text);

  /// Canonical "num/den" rendering; integers render as "n/1".
  std::string str() const;
  /// 12 significant digits.
  std::string decimal() const;
  double to_double() const { return v_.get_d(); }

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }

  Rat pow(unsigned exponent) const;
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  const mpq_class& raw() const { return v_; }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

inline const Rat& half() {
  static const Rat h(1, 2);
  return h;
}

inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }

/// 12-significant-digit rendering shared by all report writers.
std::string format_decimal(double x);

}  // namespace hv

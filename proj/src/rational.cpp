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

#include "hv/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "hv/errors.hpp"

namespace hv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(whole) + "'");
  mpz_class z(std::string(s), 10);
  return negative ? mpz_class(-z) : z;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw InvalidParameter("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InvalidParameter("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::from_double(double x) {
  if (!std::isfinite(x)) throw InvalidParameter("non-finite value");
  return Rat(mpq_class(x));
}

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw ParseError("empty rational");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) throw ParseError("malformed denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(mpq_class(num, den));
  }

  // Decimal with optional exponent.
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class ez = parse_integer(s.substr(e + 1), text);
    if (!ez.fits_slong_p() || std::labs(ez.get_si()) > 4096) {
      throw ParseError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = ez.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(text) + "'");
    digits = std::string(s);
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long scale = exponent - frac_len;
  mpq_class q = scale >= 0 ? mpq_class(num * pow10(static_cast<unsigned long>(scale)))
                           : mpq_class(num, pow10(static_cast<unsigned long>(-scale)));
  return Rat(q);
}

std::string Rat::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rat::decimal() const { return format_decimal(to_double()); }

Rat Rat::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rat(mpq_class(num, den));
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

int exit_code(ErrorClass cls) noexcept {
  switch (cls) {
    case ErrorClass::Parse: return 2;
    case ErrorClass::Validation: return 3;
    case ErrorClass::Cap: return 4;
    case ErrorClass::Internal: return 5;
  }
  return 5;
}

const char* to_string(ErrorClass cls) noexcept {
  switch (cls) {
    case ErrorClass::Parse: return "parse";
    case ErrorClass::Validation: return "validation";
    case ErrorClass::Cap: return "cap";
    case ErrorClass::Internal: return "internal";
  }
  return "internal";
}

}  // namespace hv

// Copyright 2026 The listpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "listpriv/rational.h"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "listpriv/error.h"

namespace listpriv {
namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw Error(ErrorCode::kParseError, "not a rational literal: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6) bad_literal(text);
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_literal(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_literal(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_literal(text);

  const std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpq_class value;
  if (exponent >= 0) {
    value = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    value = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
  }
  if (negative) value = -value;
  return Rational(value);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorCode::kParseError, "zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) bad_literal(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) {
      num_digits.remove_prefix(1);
    }
    if (!all_digits(num_digits) || !all_digits(den)) bad_literal(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string(num_digits), 10);
    if (!num.empty() && num.front() == '-') n = -n;
    return Rational(mpq_class(n, d));
  }
  return parse_decimal(text);
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string to_decimal(const Rational& q, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, q.to_double());
  return buf;
}

std::uint64_t scaled_floor_u64(const Rational& q) {
  mpz_class scaled = q.numerator();
  scaled <<= 64;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), q.denominator().get_mpz_t());
  if (sgn(scaled) < 0) return 0;
  mpz_class two64 = 1;
  two64 <<= 64;
  if (scaled >= two64) return ~std::uint64_t{0};
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, scaled.get_mpz_t());
  return out;
}

}  // namespace listpriv

// Copyright 2026 The seqauction Authors
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

#include "seqauction/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace seqauction {
namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  if (!is_integer_literal(text)) {
    throw std::invalid_argument("malformed rational: \"" + std::string(whole) +
                                "\"");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return mpz_class(std::string(text), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
      throw std::invalid_argument("rational denominator must be positive: \"" +
                                  std::string(text) + "\"");
    }
    den = parse_integer(den_text, text);
    if (den == 0) {
      throw std::invalid_argument("zero denominator: \"" + std::string(text) +
                                  "\"");
    }
  }
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(10); }

std::string Rational::decimal(int places) const {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const mpz_class& den = value_.get_den();
  mpz_class num = value_.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  // floor((2 * |num| * 10^places + den) / (2 * den))
  mpz_class scaled = (2 * num * scale + den) / (2 * den);
  std::string digits = scaled.get_str(10);
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                    '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (negative && scaled != 0) digits.insert(0, "-");
  return digits;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace seqauction

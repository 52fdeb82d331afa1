// Copyright 2026 The g2nil Authors
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

#include "g2nil/rational.hpp"

#include <cctype>

#include "g2nil/errors.hpp"

namespace g2nil {

namespace {

bool parse_integer(std::string_view s, mpz_class& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZeroError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

std::optional<Rational> Rational::try_parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
  } else {
    if (!parse_integer(trim(text.substr(0, slash)), num)) return std::nullopt;
    const auto rest = trim(text.substr(slash + 1));
    if (rest.empty() || rest[0] == '-' || rest[0] == '+') return std::nullopt;
    if (!parse_integer(rest, den) || den == 0) return std::nullopt;
  }
  return Rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto r = try_parse(text);
  if (!r) throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  return *r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZeroError("inverse of zero rational");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZeroError("rational division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

std::optional<Rational> Rational::exact_root(unsigned k) const {
  if (k == 0) return std::nullopt;
  if (sign() < 0 && k % 2 == 0) return std::nullopt;
  mpz_class rn, rd;
  const mpz_class an = ::abs(q_.get_num());
  if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), q_.get_den_mpz_t(), k) == 0) return std::nullopt;
  if (sign() < 0) rn = -rn;
  return Rational(rn, rd);
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace g2nil

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

#ifndef G2NIL_RATIONAL_HPP
#define G2NIL_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace g2nil {

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  static Rational parse(std::string_view text);
  /// As `parse`, but returns nullopt instead of throwing.
  static std::optional<Rational> try_parse(std::string_view text);

  const mpq_class& raw() const noexcept { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_one() const noexcept { return q_ == 1; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  Rational inverse() const;
  Rational abs() const { return Rational(::abs(q_)); }
  Rational pow(unsigned e) const;

  /// Exact k-th root when it exists in Q (odd k keeps the sign).
  std::optional<Rational> exact_root(unsigned k) const;

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Convenience for literals in tests and tables: `frac(46, 51)`.
inline Rational frac(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }

}  // namespace g2nil

#endif  // G2NIL_RATIONAL_HPP

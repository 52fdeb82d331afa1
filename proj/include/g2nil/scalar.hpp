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

#ifndef G2NIL_SCALAR_HPP
#define G2NIL_SCALAR_HPP

#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "g2nil/ninth_root.hpp"
#include "g2nil/polynomial.hpp"
#include "g2nil/rational.hpp"

namespace g2nil {

/// Identifies the ring a scalar lives in. Q embeds into every other ring,
/// so Rational is compatible with everything; two ninth-root rings are
/// compatible only when their moduli agree.
struct Ring {
  enum class Kind { kRational, kNinthRoot, kPolynomial };
  Kind kind = Kind::kRational;
  Rational modulus;  // meaningful for kNinthRoot only

  static Ring rational() { return {}; }
  static Ring ninth_root(const Rational& d) { return {Kind::kNinthRoot, d}; }
  static Ring polynomial() { return {Kind::kPolynomial, Rational()}; }

  /// Smallest ring containing both; throws RingMismatchError otherwise.
  static Ring join(const Ring& a, const Ring& b);

  std::string str() const;
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind == b.kind && (a.kind != Kind::kNinthRoot || a.modulus == b.modulus);
  }
};

/// An exact number: a rational, an element of Q[d]/(d^9 - D), or a
/// multivariate polynomial over Q. Binary operations promote Rational
/// operands into the other operand's ring.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& r) : v_(r) {}    // NOLINT(google-explicit-constructor)
  Scalar(long r) : v_(Rational(r)) {}     // NOLINT(google-explicit-constructor)
  Scalar(int r) : v_(Rational(r)) {}      // NOLINT(google-explicit-constructor)
  Scalar(const NinthRoot& x) : v_(x) {}   // NOLINT(google-explicit-constructor)
  Scalar(const Polynomial& p) : v_(p) {}  // NOLINT(google-explicit-constructor)

  /// The real ninth root of `d`: a plain rational when `d` is a perfect
  /// ninth power in Q, otherwise an element of the field Q[d]/(d^9 - D').
  /// D' = D unless D = r^3 is a cube, where x^9 - D is reducible and the
  /// root is stored as d^3 over D' = r instead.
  static Scalar ninth_root_of(const Rational& d);

  Ring ring() const;
  bool is_rational() const noexcept { return std::holds_alternative<Rational>(v_); }
  bool is_ninth_root() const noexcept { return std::holds_alternative<NinthRoot>(v_); }
  bool is_polynomial() const noexcept { return std::holds_alternative<Polynomial>(v_); }

  const Rational& as_rational() const;
  const NinthRoot& as_ninth_root() const { return std::get<NinthRoot>(v_); }
  const Polynomial& as_polynomial() const { return std::get<Polynomial>(v_); }
  /// Rational value if this scalar is (or collapses to) a rational.
  std::optional<Rational> to_rational() const;
  /// Lifts into the given ring (Rational values only move upward).
  Scalar promoted(const Ring& r) const;

  bool is_zero() const;
  bool is_one() const;
  /// Sign of the real value; throws PreconditionError for non-constant
  /// polynomials.
  int sign() const;
  double to_double() const;

  /// Multiplicative inverse; polynomials must be nonzero constants.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Exact division; for polynomials the quotient must be exact.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality across compatible rings (2 == 2 + 0*d).
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

  template <typename Visitor>
  decltype(auto) visit(Visitor&& vis) const {
    return std::visit(std::forward<Visitor>(vis), v_);
  }

 private:
  std::variant<Rational, NinthRoot, Polynomial> v_;
};

}  // namespace g2nil

#endif  // G2NIL_SCALAR_HPP

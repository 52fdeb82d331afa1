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

#ifndef G2NIL_NINTH_ROOT_HPP
#define G2NIL_NINTH_ROOT_HPP

#include <array>
#include <ostream>
#include <string>

#include "g2nil/rational.hpp"

namespace g2nil {

/// Element a0 + a1*d + ... + a8*d^8 of Q[d]/(d^9 - D), where d is the real
/// (sign-preserving) ninth root of the modulus D != 0.
class NinthRoot {
 public:
  static constexpr int kDegree = 9;
  using Coeffs = std::array<Rational, kDegree>;

  NinthRoot(const Rational& modulus, Coeffs coeffs);
  /// Embeds a rational as a constant of the extension.
  NinthRoot(const Rational& modulus, const Rational& value);

  /// The generator d itself.
  static NinthRoot generator(const Rational& modulus);

  const Rational& modulus() const noexcept { return modulus_; }
  const Coeffs& coeffs() const noexcept { return c_; }

  bool is_zero() const;
  /// True when only the constant coefficient may be nonzero.
  bool is_rational() const;

  /// Sign of the real number this element denotes. Exact zero gives 0;
  /// otherwise the value is evaluated at doubling working precision until
  /// it clears the rounding bound.
  int sign() const;
  double to_double() const;

  /// Inverse via the extended Euclidean algorithm modulo d^9 - D; throws
  /// ZeroDivisorError for nonzero non-units (reducible modulus).
  NinthRoot inverse() const;

  NinthRoot operator-() const;
  NinthRoot& operator+=(const NinthRoot& o);
  NinthRoot& operator-=(const NinthRoot& o);
  NinthRoot& operator*=(const NinthRoot& o);
  NinthRoot& operator*=(const Rational& c);

  friend NinthRoot operator+(NinthRoot a, const NinthRoot& b) { return a += b; }
  friend NinthRoot operator-(NinthRoot a, const NinthRoot& b) { return a -= b; }
  friend NinthRoot operator*(NinthRoot a, const NinthRoot& b) { return a *= b; }
  friend NinthRoot operator*(NinthRoot a, const Rational& c) { return a *= c; }

  friend bool operator==(const NinthRoot& a, const NinthRoot& b) {
    return a.modulus_ == b.modulus_ && a.c_ == b.c_;
  }

  /// "a0 + a1*d + ... [mod d^9 = D]".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const NinthRoot& x) { return os << x.str(); }

 private:
  void check_same_ring(const NinthRoot& o) const;

  Rational modulus_;
  Coeffs c_;
};

}  // namespace g2nil

#endif  // G2NIL_NINTH_ROOT_HPP

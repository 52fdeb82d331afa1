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

#ifndef G2NIL_POLYNOMIAL_HPP
#define G2NIL_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "g2nil/rational.hpp"

namespace g2nil {

/// Sparse multivariate polynomial over Q in named indeterminates.
///
/// Representation: `vars()` is the sorted list of indeterminates that occur
/// with a positive exponent in at least one term; every term stores one
/// exponent per entry of `vars()`. Terms are kept in strictly decreasing
/// lexicographic order of their exponent vectors with nonzero coefficients,
/// so two equal polynomials have identical representations and the zero
/// polynomial is the empty term list.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  struct Term {
    Exponents exps;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial variable(const std::string& name);
  /// Builds from unsorted, possibly duplicated terms over `vars`.
  static Polynomial from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return vars_.empty(); }
  /// The value when the polynomial is a constant, nullopt otherwise.
  std::optional<Rational> constant_value() const;
  unsigned total_degree() const;
  unsigned degree_in(const std::string& var) const;

  /// Full substitution; throws PreconditionError if a variable is unbound.
  Rational evaluate(const std::map<std::string, Rational>& values) const;
  /// Partial substitution of some variables by polynomials.
  Polynomial substitute(const std::map<std::string, Polynomial>& values) const;

  /// Exact quotient; throws PreconditionError when `d` does not divide.
  Polynomial divide_exact(const Polynomial& d) const;

  Polynomial pow(unsigned e) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Human-readable form such as "-1/2*c157*c167^2 + c237".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void normalize();

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

}  // namespace g2nil

#endif  // G2NIL_POLYNOMIAL_HPP

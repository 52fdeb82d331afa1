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

#ifndef G2NIL_FORM_HPP
#define G2NIL_FORM_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "g2nil/matrix.hpp"
#include "g2nil/scalar.hpp"

namespace g2nil {

/// Basis monomial e^{i1...ik} encoded as a bit set (bit i <-> e^{i+1}).
using Mask = std::uint32_t;

inline constexpr int kMaxDim = 31;

/// A named, fixed coframe {s^1, ..., s^n} of an n-dimensional space. Two
/// forms can only be combined when their coframes compare equal.
struct Coframe {
  int dim = 0;
  std::string symbol = "e";

  Coframe() = default;
  Coframe(int n, std::string sym = "e");

  /// Label of the 0-based generator i, e.g. "e3" for i = 2.
  std::string label(int i) const { return symbol + std::to_string(i + 1); }
  Mask full_mask() const { return dim == 32 ? ~Mask{0} : ((Mask{1} << dim) - 1); }

  friend bool operator==(const Coframe& a, const Coframe& b) {
    return a.dim == b.dim && a.symbol == b.symbol;
  }
};

/// Ascending 0-based indices of the set bits.
std::vector<int> mask_indices(Mask m);
Mask mask_of(const std::vector<int>& indices);

/// Sign (+1/-1) of e^A ^ e^B relative to e^{A|B}; 0 when A and B overlap.
int wedge_sign(Mask a, Mask b);

/// Tangent vector in the frame dual to a coframe.
class Vector {
 public:
  Vector() = default;
  Vector(Coframe space, std::vector<Scalar> components);
  /// The i-th frame vector e_i (0-based).
  static Vector basis(const Coframe& space, int i);

  const Coframe& space() const noexcept { return space_; }
  const std::vector<Scalar>& components() const noexcept { return comps_; }
  const Scalar& operator[](int i) const { return comps_.at(static_cast<std::size_t>(i)); }

 private:
  Coframe space_;
  std::vector<Scalar> comps_;
};

/// Homogeneous alternating k-form over a coframe, stored sparsely: only
/// nonzero coefficients of increasing-index monomials are kept.
class KForm {
 public:
  KForm() = default;
  KForm(Coframe space, int degree);

  /// The monomial e^{i1} ^ ... ^ e^{ik}; unordered indices are sorted with
  /// the corresponding sign, repeated indices give the zero form.
  static KForm monomial(const Coframe& space, const std::vector<int>& indices,
                        const Scalar& coeff = Scalar(1));
  static KForm constant(const Coframe& space, const Scalar& value);
  /// 1-form sum_i c_i e^i.
  static KForm one_form(const Coframe& space, const std::vector<Scalar>& coeffs);
  /// The reference volume e^{1...n}.
  static KForm volume(const Coframe& space, const Scalar& coeff = Scalar(1));

  const Coframe& space() const noexcept { return space_; }
  int degree() const noexcept { return degree_; }
  const std::map<Mask, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(Mask m) const;
  /// Coefficient of e^{1...n}; zero unless the degree is n.
  Scalar top_coefficient() const { return coefficient(space_.full_mask()); }
  /// Ring spanned by all coefficients.
  Ring ring() const;

  /// Adds c * e^m (m must have popcount == degree).
  void add_term(Mask m, const Scalar& c);

  KForm operator-() const;
  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const Scalar& c);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(const Scalar& c, KForm a) { return a *= c; }
  friend KForm operator*(KForm a, const Scalar& c) { return a *= c; }
  /// Exact equality; zero forms compare equal whatever their degree label
  /// (products beyond the top degree are returned as a zero 0-form).
  friend bool operator==(const KForm& a, const KForm& b);

  /// Applies `f` to every coefficient (zero results are dropped).
  template <typename F>
  KForm map_coefficients(F&& f) const {
    KForm out(space_, degree_);
    for (const auto& [m, c] : terms_) out.add_term(m, f(c));
    return out;
  }

  /// Literal such as "e137 + 2*e156 - 1/2*e257".
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const KForm& f) { return os << f.str(); }

 private:
  Coframe space_;
  int degree_ = 0;
  std::map<Mask, Scalar> terms_;
};

/// a ^ b, with exact sign bookkeeping. Degrees summing past n give zero.
KForm wedge(const KForm& a, const KForm& b);
/// Interior product i_v a, of degree k-1.
KForm contract(const Vector& v, const KForm& a);
/// Contraction by the frame vector e_i (0-based). Contractions of 0-forms
/// are zero.
KForm contract_basis(int i, const KForm& a);

/// Re-expresses `a` (written in `a.space()`) in the coframe `target`, given
/// old^i = sum_j m(i, j) target^j.
KForm change_coframe(const KForm& a, const ScalarMatrix& m, const Coframe& target);

/// Parses form literals: terms `[+-][coeff*]<symbol><digits>` where each
/// digit is one 1-based index, e.g. "e123 + 1/2*e257 - 2*e157", or "0".
/// With `bare_digits` the symbol may be omitted ("46/51*14+15+23").
/// `degree` is required to type the literal "0"; otherwise it is inferred.
KForm parse_form(const Coframe& space, std::string_view text, std::optional<int> degree = std::nullopt,
                 bool bare_digits = false);

}  // namespace g2nil

#endif  // G2NIL_FORM_HPP

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

#ifndef G2NIL_LIE_ALGEBRA_HPP
#define G2NIL_LIE_ALGEBRA_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2nil/form.hpp"
#include "g2nil/matrix.hpp"

namespace g2nil {

/// Linear subspace of an n-dimensional space, stored as the nonzero rows
/// of a reduced row echelon basis. Equality is therefore canonical.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, const std::vector<std::vector<Scalar>>& spanning);

  int ambient() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Scalar>>& basis() const noexcept { return basis_; }
  bool contains(const std::vector<Scalar>& v) const;

  /// Labels like "<e3, e4>" when every basis row is a frame vector;
  /// otherwise each row is printed as a combination.
  std::string str(const std::string& symbol = "e") const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int ambient_ = 0;
  std::vector<std::vector<Scalar>> basis_;
};

/// A Lie algebra given by the Chevalley-Eilenberg differential of a coframe
/// {e^1..e^n}. Convention: [e_i, e_j] = sum_k a^k_ij e_k with
/// de^k = -sum_{i<j} a^k_ij e^{ij}, so the literal "12" means de = e^1 ^ e^2.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Throws NotALieAlgebraError if d(de^k) != 0 for some generator.
  LieAlgebra(Coframe space, std::vector<KForm> differentials);

  const Coframe& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim; }
  const std::vector<KForm>& differentials() const noexcept { return d1_; }

  /// a^k_ij (0-based).
  Scalar structure_constant(int i, int j, int k) const;
  /// [u, v] for vectors in the frame.
  Vector bracket(const Vector& u, const Vector& v) const;
  /// Matrix of ad(u): column j holds the components of [u, e_j].
  ScalarMatrix ad(const Vector& u) const;
  ScalarMatrix ad(int i) const { return ad(Vector::basis(space_, i)); }

  /// Chevalley-Eilenberg differential of an arbitrary form (zero on
  /// top-degree forms).
  KForm d(const KForm& a) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.space_ == b.space_ && a.d1_ == b.d1_;
  }

 private:
  Coframe space_;
  std::vector<KForm> d1_;
};

/// Parses "0,0,12,13,14,15+23,16+23+24" (rational coefficients allowed,
/// e.g. "46/51*14+15+23"; optional surrounding parentheses; the "e"
/// prefix is optional). Runs the d^2 = 0 check.
LieAlgebra parse_structure(std::string_view text, const std::string& symbol = "e");

/// Literal form of the structure equations, inverse of parse_structure.
std::string structure_string(const LieAlgebra& lie);

KForm ce_differential(const LieAlgebra& lie, const KForm& a);

struct StructureReport {
  Subspace center;
  Subspace derived;
  std::vector<int> lower_central_dims;  // dims of g, [g,g], [g,[g,g]], ...
  bool nilpotent = false;
  int step = 0;  // nilpotency step (0 for the zero algebra)
  bool unimodular = false;
  ScalarMatrix killing;
  bool killing_zero = false;
};

StructureReport structure_report(const LieAlgebra& lie);

struct NiceBasisReport {
  bool nice = false;
  /// 1-based (i, j) pairs hit by more than one k (first condition).
  std::vector<std::pair<int, int>> multiple_targets;
  /// 1-based ((i, j), (l, m), k) with a^k_ij, a^k_lm nonzero and the pairs
  /// overlapping in exactly one index (second condition).
  struct Overlap {
    std::pair<int, int> first, second;
    int k;
  };
  std::vector<Overlap> overlaps;
};

NiceBasisReport is_nice_basis(const LieAlgebra& lie);

/// True iff every derivation has zero trace.
bool derivations_traceless(const LieAlgebra& lie);
/// Basis of Der(L) as n x n matrices (D e_j = sum_i D(i, j) e_i).
std::vector<ScalarMatrix> derivations(const LieAlgebra& lie);

/// Re-expresses the algebra in a new coframe {f^j}, where
/// e^i = sum_j m(i, j) f^j. Throws DivisionByZeroError if m is singular.
LieAlgebra change_of_basis(const LieAlgebra& lie, const ScalarMatrix& m,
                           const std::string& symbol = "");

}  // namespace g2nil

#endif  // G2NIL_LIE_ALGEBRA_HPP

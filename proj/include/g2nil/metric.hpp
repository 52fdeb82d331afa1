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

#ifndef G2NIL_METRIC_HPP
#define G2NIL_METRIC_HPP

#include <optional>
#include <vector>

#include "g2nil/form.hpp"
#include "g2nil/lie_algebra.hpp"
#include "g2nil/matrix.hpp"

namespace g2nil {

/// (p, q) = (#positive, #negative) directions, plus the nullity.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Symmetric bilinear form on the frame of a coframe. Degenerate Gram
/// matrices are accepted as data; curvature operations refuse them.
class PseudoMetric {
 public:
  PseudoMetric() = default;
  PseudoMetric(Coframe space, ScalarMatrix gram);
  static PseudoMetric diagonal(const Coframe& space, const std::vector<Scalar>& d);

  const Coframe& space() const noexcept { return space_; }
  const ScalarMatrix& gram() const noexcept { return gram_; }
  int dim() const noexcept { return space_.dim; }
  const Scalar& operator()(int i, int j) const {
    return gram_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }

  /// Exact signature; empty when the entries are non-constant polynomials.
  const std::optional<Signature>& signature() const noexcept { return signature_; }
  bool is_degenerate() const;
  Scalar evaluate(const Vector& u, const Vector& v) const;

  friend bool operator==(const PseudoMetric& a, const PseudoMetric& b) {
    return a.space_ == b.space_ && a.gram_ == b.gram_;
  }

 private:
  Coframe space_;
  ScalarMatrix gram_;
  std::optional<Signature> signature_;
};

/// v^flat = i_v g.
KForm musical_flat(const PseudoMetric& g, const Vector& v);
/// Gram inverse: the induced metric on the coframe. Throws
/// SingularMetricError when g is degenerate.
ScalarMatrix dual_metric(const PseudoMetric& g);
/// det(g) * g^{-1}, available without division (polynomial entries).
ScalarMatrix dual_metric_adjugate(const PseudoMetric& g);

/// Levi-Civita coefficients: nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
class Connection {
 public:
  Connection() = default;
  explicit Connection(int n) : n_(n), g_(static_cast<std::size_t>(n * n * n)) {}
  int dim() const noexcept { return n_; }
  Scalar& operator()(int i, int j, int k) { return g_[idx(i, j, k)]; }
  const Scalar& operator()(int i, int j, int k) const { return g_[idx(i, j, k)]; }
  bool is_zero() const;

 private:
  std::size_t idx(int i, int j, int k) const {
    return static_cast<std::size_t>((i * n_ + j) * n_ + k);
  }
  int n_ = 0;
  std::vector<Scalar> g_;
};

/// R_ijkl = g(R(e_i, e_j) e_k, e_l) with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
/// Ric_jk = sum g^{il} R_ijkl is the trace of X -> R(X, e_j) e_k.
class CurvatureTensor {
 public:
  CurvatureTensor() = default;
  explicit CurvatureTensor(int n) : n_(n), r_(static_cast<std::size_t>(n * n * n * n)) {}
  int dim() const noexcept { return n_; }
  Scalar& operator()(int i, int j, int k, int l) { return r_[idx(i, j, k, l)]; }
  const Scalar& operator()(int i, int j, int k, int l) const { return r_[idx(i, j, k, l)]; }
  bool is_zero() const;
  /// Pair antisymmetry, pair exchange and the first Bianchi identity.
  bool has_symmetries() const;

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    return static_cast<std::size_t>(((i * n_ + j) * n_ + k) * n_ + l);
  }
  int n_ = 0;
  std::vector<Scalar> r_;
};

Connection levi_civita(const LieAlgebra& lie, const PseudoMetric& g);
CurvatureTensor riemann(const LieAlgebra& lie, const PseudoMetric& g);

enum class RicciMode { kGeneral, kNilpotent };

/// Ricci tensor in the frame. kNilpotent uses
/// Ric(u, v) = 1/2 (g(du^flat, dv^flat) - g(ad u, ad v)) and requires a
/// unimodular algebra with vanishing Killing form.
ScalarMatrix ricci(const LieAlgebra& lie, const PseudoMetric& g, RicciMode mode = RicciMode::kGeneral);
ScalarMatrix ricci_from_riemann(const CurvatureTensor& r, const ScalarMatrix& dual);

struct EinsteinResult {
  bool einstein = false;
  std::optional<Scalar> lambda;  // set iff einstein
  Scalar scal;                   // sum g^{ij} Ric_ij
  ScalarMatrix ricci;
};

EinsteinResult einstein_check(const LieAlgebra& lie, const PseudoMetric& g,
                              RicciMode mode = RicciMode::kGeneral);
/// Ric = lambda g for some lambda (exact); the scalar is returned.
std::optional<Scalar> proportionality(const ScalarMatrix& ric, const ScalarMatrix& gram);

/// Inner product on End(V) = V* (x) V: h(a (x) x, b (x) y) = h*(a, b) h(x, y).
/// Endomorphisms are n x n matrices with column j the image of e_j.
Scalar endomorphism_inner(const ScalarMatrix& gram, const ScalarMatrix& dual, const ScalarMatrix& a,
                          const ScalarMatrix& b);

struct ObstructionReport {
  int dim_m = 0;        // radical of g on ad(h)
  int dim_n = 0;        // radical of g on d(h*)
  int dim_derived = 0;  // dim [h, h]
  int dim_center = 0;   // dim z(h)
  bool inequality_holds = false;  // dim_m + dim_n >= dim_derived - dim_center
};

/// Radicals are taken of the restricted bilinear forms. `dual` defaults to
/// the inverse Gram; pass it explicitly to study degenerate metrics.
ObstructionReport obstruction_dims(const LieAlgebra& lie, const PseudoMetric& g);
ObstructionReport obstruction_dims(const LieAlgebra& lie, const ScalarMatrix& gram, const ScalarMatrix& dual);

/// Dimension of the radical of the form with Gram matrix `m` (= nullity).
int radical_dim(const ScalarMatrix& m);

}  // namespace g2nil

#endif  // G2NIL_METRIC_HPP

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

#include "g2nil/metric.hpp"

#include "g2nil/errors.hpp"
#include "g2nil/hodge.hpp"

namespace g2nil {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

bool is_polynomial_matrix(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).is_polynomial() && !m(i, j).as_polynomial().is_constant()) return true;
  return false;
}

}  // namespace

PseudoMetric::PseudoMetric(Coframe space, ScalarMatrix gram) : space_(std::move(space)), gram_(std::move(gram)) {
  if (!gram_.is_square() || static_cast<int>(gram_.rows()) != space_.dim) {
    throw DimensionError("Gram matrix does not match the space dimension");
  }
  if (!gram_.is_symmetric()) throw DimensionError("Gram matrix is not symmetric");
  if (!is_polynomial_matrix(gram_)) {
    const auto [p, q, z] = g2nil::signature(gram_);
    signature_ = Signature{p, q, z};
  }
}

PseudoMetric PseudoMetric::diagonal(const Coframe& space, const std::vector<Scalar>& d) {
  return PseudoMetric(space, ScalarMatrix::diagonal(d));
}

bool PseudoMetric::is_degenerate() const {
  if (signature_) return signature_->zero > 0;
  return bareiss_determinant(gram_).is_zero();
}

Scalar PseudoMetric::evaluate(const Vector& a, const Vector& b) const {
  Scalar s;
  for (int i = 0; i < dim(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim(); ++j)
      if (!b[j].is_zero()) s += a[i] * (*this)(i, j) * b[j];
  }
  return s;
}

KForm musical_flat(const PseudoMetric& g, const Vector& v) {
  if (!(g.space() == v.space())) throw DimensionError("flat of a vector on another space");
  std::vector<Scalar> c(u(g.dim()));
  for (int j = 0; j < g.dim(); ++j)
    for (int i = 0; i < g.dim(); ++i)
      if (!v[i].is_zero()) c[u(j)] += v[i] * g(i, j);
  return KForm::one_form(g.space(), c);
}

ScalarMatrix dual_metric(const PseudoMetric& g) {
  if (g.is_degenerate()) throw SingularMetricError("metric is degenerate");
  return inverse(g.gram());
}

ScalarMatrix dual_metric_adjugate(const PseudoMetric& g) { return adjugate(g.gram()); }

bool Connection::is_zero() const {
  for (const auto& x : g_)
    if (!x.is_zero()) return false;
  return true;
}

bool CurvatureTensor::is_zero() const {
  for (const auto& x : r_)
    if (!x.is_zero()) return false;
  return true;
}

bool CurvatureTensor::has_symmetries() const {
  const int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const Scalar& r = (*this)(i, j, k, l);
          if (!(r == -(*this)(j, i, k, l))) return false;
          if (!(r == -(*this)(i, j, l, k))) return false;
          if (!(r == (*this)(k, l, i, j))) return false;
          if (!(r + (*this)(j, k, i, l) + (*this)(k, i, j, l)).is_zero()) return false;
        }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

void require_nondegenerate(const PseudoMetric& g) {
  if (g.is_degenerate()) throw SingularMetricError("curvature needs a nondegenerate metric");
}

// Structure constants as a dense cube: c[(i*n + j)*n + k] = a^k_ij.
std::vector<Scalar> structure_cube(const LieAlgebra& lie) {
  const int n = lie.dim();
  std::vector<Scalar> c(u(n * n * n));
  for (int k = 0; k < n; ++k)
    for (const auto& [mask, v] : lie.differentials()[u(k)].terms()) {
      const auto idx = mask_indices(mask);
      const int i = idx[0], j = idx[1];
      c[u((i * n + j) * n + k)] = -v;
      c[u((j * n + i) * n + k)] = v;
    }
  return c;
}

Connection levi_civita_with(const LieAlgebra& lie, const PseudoMetric& g, const ScalarMatrix& dual) {
  const int n = lie.dim();
  const auto c = structure_cube(lie);
  // lowered[(i,j,k)] = g([e_i, e_j], e_k)
  std::vector<Scalar> low(u(n * n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < n; ++m) {
        const Scalar& a = c[u((i * n + j) * n + m)];
        if (a.is_zero()) continue;
        for (int k = 0; k < n; ++k)
          if (!g(m, k).is_zero()) low[u((i * n + j) * n + k)] += a * g(m, k);
      }
  auto L = [&](int i, int j, int k) -> const Scalar& { return low[u((i * n + j) * n + k)]; };
  Connection conn(n);
  const Scalar half = Scalar(frac(1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Scalar> koszul(u(n));
      bool any = false;
      for (int k = 0; k < n; ++k) {
        koszul[u(k)] = half * (L(i, j, k) - L(j, k, i) + L(k, i, j));
        any = any || !koszul[u(k)].is_zero();
      }
      if (!any) continue;
      for (int m = 0; m < n; ++m) {
        Scalar s;
        for (int k = 0; k < n; ++k)
          if (!koszul[u(k)].is_zero() && !dual(u(m), u(k)).is_zero()) s += dual(u(m), u(k)) * koszul[u(k)];
        conn(i, j, m) = s;
      }
    }
  return conn;
}

CurvatureTensor riemann_with(const LieAlgebra& lie, const PseudoMetric& g, const Connection& conn) {
  const int n = lie.dim();
  const auto c = structure_cube(lie);
  // gam[i] is the endomorphism nabla_{e_i}: column l holds nabla_i e_l.
  std::vector<ScalarMatrix> gam;
  for (int i = 0; i < n; ++i) {
    ScalarMatrix m(u(n), u(n));
    for (int l = 0; l < n; ++l)
      for (int k = 0; k < n; ++k) m(u(k), u(l)) = conn(i, l, k);
    gam.push_back(std::move(m));
  }
  CurvatureTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ScalarMatrix e = gam[u(i)] * gam[u(j)] - gam[u(j)] * gam[u(i)];
      for (int k = 0; k < n; ++k) {
        const Scalar& a = c[u((i * n + j) * n + k)];
        if (!a.is_zero()) e = e - a * gam[u(k)];
      }
      const ScalarMatrix low = g.gram() * e;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          r(i, j, k, l) = low(u(l), u(k));
          r(j, i, k, l) = -low(u(l), u(k));
        }
    }
  return r;
}

}  // namespace

Connection levi_civita(const LieAlgebra& lie, const PseudoMetric& g) {
  require_nondegenerate(g);
  return levi_civita_with(lie, g, inverse(g.gram()));
}

CurvatureTensor riemann(const LieAlgebra& lie, const PseudoMetric& g) {
  require_nondegenerate(g);
  return riemann_with(lie, g, levi_civita(lie, g));
}

ScalarMatrix ricci_from_riemann(const CurvatureTensor& r, const ScalarMatrix& dual) {
  const int n = r.dim();
  ScalarMatrix ric(u(n), u(n));
  for (int j = 0; j < n; ++j)
    for (int l = j; l < n; ++l) {
      Scalar s;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          const Scalar& d = dual(u(i), u(k));
          if (d.is_zero()) continue;
          const Scalar& x = r(i, j, l, k);
          if (!x.is_zero()) s += d * x;
        }
      ric(u(j), u(l)) = s;
      ric(u(l), u(j)) = s;
    }
  return ric;
}

Scalar endomorphism_inner(const ScalarMatrix& gram, const ScalarMatrix& dual, const ScalarMatrix& a,
                          const ScalarMatrix& b) {
  // sum_{j,k,m,l} a(k,j) b(l,m) h*(e^j, e^m) h(e_k, e_l) = tr(a^T gram b dual)
  const ScalarMatrix t = a.transposed() * gram * b * dual;
  Scalar s;
  for (std::size_t i = 0; i < t.rows(); ++i) s += t(i, i);
  return s;
}

ScalarMatrix ricci(const LieAlgebra& lie, const PseudoMetric& g, RicciMode mode) {
  if (!(lie.space() == g.space())) throw DimensionError("metric and algebra live on different frames");
  require_nondegenerate(g);
  const ScalarMatrix dual = inverse(g.gram());
  const int n = lie.dim();
  if (mode == RicciMode::kGeneral) {
    const Connection conn = levi_civita_with(lie, g, dual);
    return ricci_from_riemann(riemann_with(lie, g, conn), dual);
  }
  const auto rep = structure_report(lie);
  if (!rep.unimodular || !rep.killing_zero) {
    throw PreconditionError("nilpotent Ricci formula needs a unimodular algebra with zero Killing form");
  }
  std::vector<KForm> dflat;
  std::vector<ScalarMatrix> ads;
  for (int i = 0; i < n; ++i) {
    dflat.push_back(lie.d(musical_flat(g, Vector::basis(g.space(), i))));
    ads.push_back(lie.ad(i));
  }
  const Scalar half = Scalar(frac(1, 2));
  ScalarMatrix ric(u(n), u(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Scalar v = half * (form_inner(dual, dflat[u(i)], dflat[u(j)]) -
                               endomorphism_inner(g.gram(), dual, ads[u(i)], ads[u(j)]));
      ric(u(i), u(j)) = v;
      ric(u(j), u(i)) = v;
    }
  return ric;
}

std::optional<Scalar> proportionality(const ScalarMatrix& ric, const ScalarMatrix& gram) {
  std::optional<Scalar> lambda;
  for (std::size_t i = 0; i < gram.rows() && !lambda; ++i)
    for (std::size_t j = 0; j < gram.cols() && !lambda; ++j)
      if (!gram(i, j).is_zero()) lambda = ric(i, j) / gram(i, j);
  if (!lambda) return ric.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (!(ric(i, j) == *lambda * gram(i, j))) return std::nullopt;
  return lambda;
}

EinsteinResult einstein_check(const LieAlgebra& lie, const PseudoMetric& g, RicciMode mode) {
  EinsteinResult res;
  res.ricci = ricci(lie, g, mode);
  const ScalarMatrix dual = inverse(g.gram());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      if (!dual(u(i), u(j)).is_zero()) res.scal += dual(u(i), u(j)) * res.ricci(u(i), u(j));
  res.lambda = proportionality(res.ricci, g.gram());
  res.einstein = res.lambda.has_value();
  return res;
}

int radical_dim(const ScalarMatrix& m) { return static_cast<int>(m.rows()) - static_cast<int>(rank(m)); }

ObstructionReport obstruction_dims(const LieAlgebra& lie, const PseudoMetric& g) {
  return obstruction_dims(lie, g.gram(), dual_metric(g));
}

ObstructionReport obstruction_dims(const LieAlgebra& lie, const ScalarMatrix& gram, const ScalarMatrix& dual) {
  const int n = lie.dim();
  const auto rep = structure_report(lie);
  ObstructionReport out;
  out.dim_derived = rep.derived.dim();
  out.dim_center = rep.center.dim();

  // Basis of ad(h) as flattened matrices.
  std::vector<std::vector<Scalar>> ad_rows;
  for (int i = 0; i < n; ++i) {
    const ScalarMatrix a = lie.ad(i);
    std::vector<Scalar> flat;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) flat.push_back(a(r, c));
    ad_rows.push_back(std::move(flat));
  }
  const Subspace ad_space(n * n, ad_rows);
  std::vector<ScalarMatrix> ad_basis;
  for (const auto& row : ad_space.basis()) {
    ScalarMatrix m(u(n), u(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m(u(r), u(c)) = row[u(r * n + c)];
    ad_basis.push_back(std::move(m));
  }
  ScalarMatrix gm(ad_basis.size(), ad_basis.size());
  for (std::size_t a = 0; a < ad_basis.size(); ++a)
    for (std::size_t b = a; b < ad_basis.size(); ++b) {
      gm(a, b) = endomorphism_inner(gram, dual, ad_basis[a], ad_basis[b]);
      gm(b, a) = gm(a, b);
    }
  out.dim_m = radical_dim(gm);

  // Basis of d(h*) inside Lambda^2.
  const auto two = monomials(n, 2);
  std::vector<std::vector<Scalar>> d_rows;
  for (const auto& df : lie.differentials()) {
    std::vector<Scalar> row;
    for (Mask m : two) row.push_back(df.coefficient(m));
    d_rows.push_back(std::move(row));
  }
  const Subspace d_space(static_cast<int>(two.size()), d_rows);
  std::vector<KForm> d_basis;
  for (const auto& row : d_space.basis()) {
    KForm f(lie.space(), 2);
    for (std::size_t t = 0; t < two.size(); ++t) f.add_term(two[t], row[t]);
    d_basis.push_back(std::move(f));
  }
  ScalarMatrix gn(d_basis.size(), d_basis.size());
  for (std::size_t a = 0; a < d_basis.size(); ++a)
    for (std::size_t b = a; b < d_basis.size(); ++b) {
      gn(a, b) = form_inner(dual, d_basis[a], d_basis[b]);
      gn(b, a) = gn(a, b);
    }
  out.dim_n = radical_dim(gn);
  out.inequality_holds = out.dim_m + out.dim_n >= out.dim_derived - out.dim_center;
  return out;
}

}  // namespace g2nil

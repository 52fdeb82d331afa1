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

#include "g2nil/search.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <exception>
#include <utility>
#include <thread>

#include "g2nil/errors.hpp"

namespace g2nil {

namespace {

std::size_t u(int i) { return static_cast<std::size_t>(i); }

// Number factories: double, or mpf_class at a fixed precision. Every
// mpf value is created through the factory so that no code depends on
// the global default precision.
struct DoubleCtx {
  using T = double;
  double operator()(double x) const { return x; }
  double from(const Rational& r) const { return r.to_double(); }
  static double mag(double x) { return std::fabs(x); }
};

struct MpfCtx {
  using T = mpf_class;
  mp_bitcnt_t prec;
  mpf_class operator()(double x) const { return mpf_class(x, prec); }
  mpf_class from(const Rational& r) const {
    mpf_class v(0, prec);
    v = r.raw();
    return v;
  }
  static mpf_class mag(const mpf_class& x) { return abs(x); }
};

// Ricci of a diagonal metric on a triangular frame, generic in the
// number type. Mirrors the exact code path in the metric module:
// Koszul connection, R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y] and
// Ric(Y, Z) = tr(X -> R(X,Y)Z).
template <typename Ctx>
class Model {
 public:
  using T = typename Ctx::T;

  Model(const LieAlgebra& lie, Ctx ctx) : n_(lie.dim()), ctx_(ctx), a_(u(n_ * n_ * n_), ctx(0)) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        for (int k = 0; k < n_; ++k) {
          const auto c = lie.structure_constant(i, j, k).to_rational();
          if (c && !c->is_zero()) a_[idx(i, j, k)] = ctx.from(*c);
        }
  }

  int n() const { return n_; }
  const Ctx& ctx() const { return ctx_; }

  // Structure constants of the frame f_b = sum_i m(i, b) e_i.
  std::vector<T> frame_constants(const std::vector<T>& p) const {
    const int n = n_;
    std::vector<T> m(u(n * n), ctx_(0)), minv(u(n * n), ctx_(0));
    for (int i = 0; i < n; ++i) m[u(i * n + i)] = ctx_(1);
    int q = 0;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < i; ++j) m[u(i * n + j)] = p[u(q++)];
    // Unit lower triangular inverse by forward substitution.
    for (int c = 0; c < n; ++c) {
      minv[u(c * n + c)] = ctx_(1);
      for (int i = c + 1; i < n; ++i) {
        T s = ctx_(0);
        for (int k = c; k < i; ++k) s -= m[u(i * n + k)] * minv[u(k * n + c)];
        minv[u(i * n + c)] = s;
      }
    }
    // t(a, b, k) = sum_{i, j} m(i, a) m(j, b) a^k_ij
    std::vector<T> t(u(n * n * n), ctx_(0));
    std::vector<T> half(u(n * n * n), ctx_(0));  // sum_i m(i, a) a^k_ij
    for (int a = 0; a < n; ++a)
      for (int i = a; i < n; ++i) {
        const T& mi = m[u(i * n + a)];
        if (mi == 0) continue;
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) {
            const T& c = a_[idx(i, j, k)];
            if (c != 0) half[idx(a, j, k)] += mi * c;
          }
      }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int j = b; j < n; ++j) {
          const T& mj = m[u(j * n + b)];
          if (mj == 0) continue;
          for (int k = 0; k < n; ++k) {
            const T& h = half[idx(a, j, k)];
            if (h != 0) t[idx(a, b, k)] += mj * h;
          }
        }
    std::vector<T> out(u(n * n * n), ctx_(0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int k = 0; k < n; ++k) {
          const T& x = t[idx(a, b, k)];
          if (x == 0) continue;
          for (int c = k; c < n; ++c) out[idx(a, b, c)] += minv[u(c * n + k)] * x;
        }
    return out;
  }

  std::vector<T> ricci(const std::vector<T>& c, const std::vector<T>& d) const {
    const int n = n_;
    // gam(i, j, m): component m of nabla_{f_i} f_j.
    std::vector<T> gam(u(n * n * n), ctx_(0));
    const T half = ctx_(0.5);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) {
          T k = c[idx(i, j, m)] * d[u(m)] - c[idx(j, m, i)] * d[u(i)] + c[idx(m, i, j)] * d[u(j)];
          if (k == 0) continue;
          gam[idx(i, j, m)] = half * k / d[u(m)];
        }
    std::vector<T> ric(u(n * n), ctx_(0));
    // tr_i gam(i, p, i), reused below.
    std::vector<T> tr(u(n), ctx_(0));
    for (int p = 0; p < n; ++p)
      for (int i = 0; i < n; ++i) tr[u(p)] += gam[idx(i, p, i)];
    for (int j = 0; j < n; ++j)
      for (int l = j; l < n; ++l) {
        T s = ctx_(0);
        for (int p = 0; p < n; ++p) s += tr[u(p)] * gam[idx(j, l, p)];
        for (int i = 0; i < n; ++i)
          for (int p = 0; p < n; ++p) {
            s -= gam[idx(j, p, i)] * gam[idx(i, l, p)];
            const T& a = c[idx(i, j, p)];
            if (a != 0) s -= a * gam[idx(p, l, i)];
          }
        ric[u(j * n + l)] = s;
        ric[u(l * n + j)] = s;
      }
    return ric;
  }

  // Unknowns: p (n(n-1)/2), then diag_0 .. diag_{n-2}; diag_{n-1} is the
  // fixed gauge value.
  std::vector<T> residual(const std::vector<T>& x, const T& gauge) const {
    const int n = n_;
    const std::size_t np = u(n * (n - 1) / 2);
    std::vector<T> p(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(np));
    std::vector<T> d(x.begin() + static_cast<std::ptrdiff_t>(np), x.end());
    d.push_back(gauge);
    const auto ric = ricci(frame_constants(p), d);
    std::vector<T> r;
    r.reserve(np + u(n - 1));
    for (int j = 0; j < n; ++j)
      for (int l = j + 1; l < n; ++l) r.push_back(ric[u(j * n + l)]);
    for (int k = 0; k + 1 < n; ++k)
      r.push_back(ric[u(k * n + k)] * d[u(k + 1)] - ric[u((k + 1) * n + k + 1)] * d[u(k)]);
    return r;
  }

 private:
  std::size_t idx(int i, int j, int k) const { return u((i * n_ + j) * n_ + k); }

  int n_;
  Ctx ctx_;
  std::vector<T> a_;
};

// Solves a x = b in place by Gaussian elimination with partial pivoting.
template <typename Ctx>
bool linear_solve(const Ctx& ctx, std::vector<std::vector<typename Ctx::T>> a, std::vector<typename Ctx::T>& b,
                  const typename Ctx::T& tiny) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (Ctx::mag(a[i][k]) > Ctx::mag(a[p][k])) p = i;
    if (Ctx::mag(a[p][k]) <= tiny) return false;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const typename Ctx::T f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    typename Ctx::T s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * b[j];
    b[k] = s / a[k][k];
  }
  (void)ctx;
  return true;
}

double norm2(const std::vector<double>& r) {
  double s = 0;
  for (double x : r) s += x * x;
  return std::sqrt(s);
}

// Forward-difference Jacobian restricted to the columns in `free`.
std::vector<std::vector<double>> jacobian(const Model<DoubleCtx>& model, const std::vector<double>& x,
                                          const std::vector<double>& r0, double gauge,
                                          const std::vector<std::size_t>& free) {
  std::vector<std::vector<double>> j(r0.size(), std::vector<double>(free.size()));
  std::vector<double> y = x;
  for (std::size_t c = 0; c < free.size(); ++c) {
    const std::size_t v = free[c];
    const double h = 1e-7 * std::max(1.0, std::fabs(x[v]));
    y[v] = x[v] + h;
    const auto r = model.residual(y, gauge);
    for (std::size_t i = 0; i < r.size(); ++i) j[i][c] = (r[i] - r0[i]) / h;
    y[v] = x[v];
  }
  return j;
}

struct LmResult {
  std::vector<double> x;
  double residual = 0;
  int iterations = 0;
};

// Levenberg-Marquardt on the unknowns listed in `free`; the others stay
// fixed.
LmResult levenberg_marquardt(const Model<DoubleCtx>& model, std::vector<double> x, double gauge,
                             const NewtonOptions& opt, const std::vector<std::size_t>& free) {
  LmResult out;
  auto r = model.residual(x, gauge);
  double cost = norm2(r);
  double mu = opt.damping;
  const DoubleCtx ctx;
  const std::size_t m = free.size();
  int it = 0;
  for (; it < opt.max_iter && cost > opt.residual_tol && std::isfinite(cost); ++it) {
    const auto jac = jacobian(model, x, r, gauge, free);
    std::vector<std::vector<double>> jtj(m, std::vector<double>(m, 0.0));
    std::vector<double> g(m, 0.0);
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t a = 0; a < m; ++a) {
        if (jac[i][a] == 0) continue;
        g[a] += jac[i][a] * r[i];
        for (std::size_t b = 0; b < m; ++b) jtj[a][b] += jac[i][a] * jac[i][b];
      }
    bool accepted = false;
    while (!accepted && mu < 1e16) {
      auto a = jtj;
      for (std::size_t k = 0; k < m; ++k) a[k][k] += mu * (jtj[k][k] + 1e-12);
      std::vector<double> step(m);
      for (std::size_t k = 0; k < m; ++k) step[k] = -g[k];
      if (!linear_solve(ctx, a, step, 0.0)) {
        mu *= 10;
        continue;
      }
      std::vector<double> y = x;
      for (std::size_t k = 0; k < m; ++k) y[free[k]] += step[k];
      const auto ry = model.residual(y, gauge);
      const double cy = norm2(ry);
      if (std::isfinite(cy) && cy < cost) {
        x = std::move(y);
        r = ry;
        cost = cy;
        mu = std::max(mu / 3, 1e-15);
        accepted = true;
      } else {
        mu *= 4;
      }
    }
    if (!accepted) break;
  }
  out.x = std::move(x);
  out.residual = cost;
  out.iterations = it;
  return out;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

std::vector<double> join(const std::vector<double>& p, const std::vector<double>& diag) {
  std::vector<double> x = p;
  x.insert(x.end(), diag.begin(), diag.end() - 1);
  return x;
}

void classify(const LieAlgebra& lie, Candidate& c, double tol, double deg_tol) {
  if (!std::isfinite(c.residual) || c.residual > tol) {
    c.status = CandidateStatus::kNonEinstein;
    return;
  }
  double dmax = 0;
  for (double d : c.diag) dmax = std::max(dmax, std::fabs(d));
  for (std::size_t k = 0; k < c.diag.size(); ++k)
    if (std::fabs(c.diag[k]) < deg_tol * dmax) {
      c.status = CandidateStatus::kDegenerate;
      c.note = "isotropic frame vector f" + std::to_string(k + 1);
      return;
    }
  const auto ric = numeric_ricci(lie, c.p, c.diag);
  double rmax = 0;
  for (const auto& row : ric)
    for (double v : row) rmax = std::max(rmax, std::fabs(v));
  for (std::size_t k = 0; k < ric.size(); ++k)
    if (std::fabs(ric[k][k]) < deg_tol * std::max(1.0, rmax)) {
      c.status = CandidateStatus::kDegenerate;
      c.note = "vanishing Ricci diagonal entry " + std::to_string(k + 1);
      return;
    }
  c.status = CandidateStatus::kEinsteinNumeric;
}

std::string mpf_string(const mpf_class& x) {
  mp_exp_t exp = 0;
  std::string digits = x.get_str(exp, 10);
  if (digits.empty()) return "0";
  std::string sign;
  if (digits[0] == '-') {
    sign = "-";
    digits.erase(0, 1);
  }
  return sign + "0." + digits + "e" + std::to_string(exp);
}

}  // namespace

std::string to_string(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::kDegenerate:
      return "Degenerate";
    case CandidateStatus::kNonEinstein:
      return "NonEinstein";
    case CandidateStatus::kEinsteinNumeric:
      return "EinsteinNumeric";
    case CandidateStatus::kEinsteinCertified:
      return "EinsteinCertified";
  }
  return "?";
}

std::vector<std::string> Parametrization::p_names() const {
  std::vector<std::string> out;
  for (auto [i, j] : p_index) out.push_back("p" + std::to_string(i + 1) + std::to_string(j + 1));
  return out;
}

std::vector<std::string> Parametrization::frame_expressions() const {
  std::vector<std::string> out;
  for (int j = 0; j < n; ++j) {
    std::string s = "f" + std::to_string(j + 1) + " = e" + std::to_string(j + 1);
    for (auto [a, b] : p_index)
      if (b == j) s += " + p" + std::to_string(a + 1) + std::to_string(b + 1) + "*e" + std::to_string(a + 1);
    out.push_back(s);
  }
  return out;
}

Parametrization parametrize(const LieAlgebra& lie) {
  Parametrization p;
  p.n = lie.dim();
  for (int i = 1; i < p.n; ++i)
    for (int j = 0; j < i; ++j) p.p_index.emplace_back(i, j);
  return p;
}

ScalarMatrix frame_matrix(int n, const std::vector<Rational>& p) {
  if (p.size() != u(n * (n - 1) / 2)) throw DimensionError("wrong number of frame coefficients");
  ScalarMatrix m = ScalarMatrix::identity(u(n));
  std::size_t q = 0;
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) m(u(i), u(j)) = Scalar(p[q++]);
  return m;
}

std::vector<std::vector<double>> numeric_ricci(const LieAlgebra& lie, const std::vector<double>& p,
                                               const std::vector<double>& diag) {
  const Model<DoubleCtx> model(lie, DoubleCtx{});
  const int n = model.n();
  if (p.size() != u(n * (n - 1) / 2) || diag.size() != u(n)) throw DimensionError("wrong candidate size");
  const auto ric = model.ricci(model.frame_constants(p), diag);
  std::vector<std::vector<double>> out(u(n), std::vector<double>(u(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[u(i)][u(j)] = ric[u(i * n + j)];
  return out;
}

std::vector<double> residual_system(const LieAlgebra& lie, const std::vector<double>& p,
                                    const std::vector<double>& diag) {
  const Model<DoubleCtx> model(lie, DoubleCtx{});
  const int n = model.n();
  if (p.size() != u(n * (n - 1) / 2) || diag.size() != u(n)) throw DimensionError("wrong candidate size");
  return model.residual(join(p, diag), diag.back());
}

void validate(const SearchConfig& c) {
  const int n = c.algebra.dim();
  if (n < 2) throw PreconditionError("search needs an algebra of dimension >= 2");
  if (c.sign_pattern.size() != u(n)) throw PreconditionError("sign pattern length must equal the dimension");
  for (int s : c.sign_pattern)
    if (s != 1 && s != -1) throw PreconditionError("sign pattern entries must be +1 or -1");
  if (!(c.newton.residual_tol > 0) || !(c.newton.damping > 0) || !(c.degeneracy_tol > 0) || !(c.radius >= 0))
    throw PreconditionError("tolerances must be positive");
  if (c.newton.max_iter < 0) throw PreconditionError("negative iteration budget");
  if (c.reconstruction.max_denominator_bits <= 0 || c.reconstruction.precision_bits < 64)
    throw PreconditionError("bad reconstruction budget");
  if (c.center && c.center->size() != u(n * (n - 1) / 2 + n))
    throw PreconditionError("center must list p then diag");
}

bool refine(const LieAlgebra& lie, Candidate& cand, int precision_bits) {
  const MpfCtx ctx{static_cast<mp_bitcnt_t>(precision_bits)};
  const Model<MpfCtx> model(lie, ctx);
  const Model<DoubleCtx> dmodel(lie, DoubleCtx{});
  const int n = model.n();
  const std::size_t np = u(n * (n - 1) / 2);
  std::vector<double> xd = join(cand.p, cand.diag);
  const double gauge_d = cand.diag.back();
  const mpf_class gauge = ctx(gauge_d);
  const auto names = parametrize(lie).p_names();

  auto to_mpf = [&](const std::vector<double>& v) {
    std::vector<mpf_class> out;
    for (double d : v) out.push_back(ctx(d));
    return out;
  };
  mpf_class tol = ctx(1), h = ctx(1), tiny = ctx(1);
  mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), static_cast<mp_bitcnt_t>(precision_bits * 7 / 8));
  mpf_div_2exp(h.get_mpf_t(), h.get_mpf_t(), static_cast<mp_bitcnt_t>(precision_bits / 3));
  mpf_div_2exp(tiny.get_mpf_t(), tiny.get_mpf_t(), static_cast<mp_bitcnt_t>(precision_bits / 2));
  // Central differences: truncation error O(h^2) is below the target.
  auto jac = [&](const std::vector<mpf_class>& x, const std::vector<std::size_t>& cols) {
    const std::size_t rows = np + u(n - 1);
    std::vector<std::vector<mpf_class>> j(rows, std::vector<mpf_class>(cols.size(), ctx(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto y = x;
      y[cols[c]] = x[cols[c]] + h;
      const auto rp = model.residual(y, gauge);
      y[cols[c]] = x[cols[c]] - h;
      const auto rm = model.residual(y, gauge);
      for (std::size_t i = 0; i < rows; ++i) j[i][c] = (rp[i] - rm[i]) / (2 * h);
    }
    return j;
  };

  // Gauge selection. The Einstein equations are invariant under a family
  // of frame changes (e.g. adding central vectors), so the solution set is
  // not isolated. Frame coefficients are pinned to 0 until the remaining
  // Jacobian columns are independent: first every coefficient that is
  // already numerically zero, then -- scanning diagonal entries first and
  // frame coefficients by decreasing magnitude -- each dependent one. If
  // the slice through the near-zero coefficients has no solution, only the
  // dependent ones are pinned.
  const auto x_start = to_mpf(xd);
  double pmax = 1.0;
  for (std::size_t k = 0; k < np; ++k) pmax = std::max(pmax, std::fabs(xd[k]));
  std::vector<std::size_t> order;
  for (std::size_t k = np; k < xd.size(); ++k) order.push_back(k);
  std::vector<std::size_t> ps(np);
  for (std::size_t k = 0; k < np; ++k) ps[k] = k;
  std::stable_sort(ps.begin(), ps.end(), [&](std::size_t a, std::size_t b) { return std::fabs(xd[a]) > std::fabs(xd[b]); });
  order.insert(order.end(), ps.begin(), ps.end());
  const auto j0 = jac(x_start, order);
  double scale = 0;
  for (const auto& row : j0)
    for (const auto& v : row) scale = std::max(scale, std::fabs(v.get_d()));

  std::vector<std::size_t> keep, pinned;
  auto select = [&](double snap) -> bool {
    keep.clear();
    pinned.clear();
    std::vector<std::vector<double>> basis;
    for (std::size_t c = 0; c < order.size(); ++c) {
      const std::size_t v = order[c];
      if (v < np && std::fabs(xd[v]) < snap * pmax) {
        pinned.push_back(v);
        continue;
      }
      std::vector<double> col(j0.size());
      for (std::size_t i = 0; i < j0.size(); ++i) col[i] = j0[i][c].get_d();
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) {
          double dot = 0;
          for (std::size_t i = 0; i < col.size(); ++i) dot += q[i] * col[i];
          for (std::size_t i = 0; i < col.size(); ++i) col[i] -= dot * q[i];
        }
      const double nrm = norm2(col);
      if (nrm > 1e-8 * std::max(1.0, scale)) {
        for (auto& x : col) x /= nrm;
        basis.push_back(std::move(col));
        keep.push_back(v);
      } else if (v < np) {
        pinned.push_back(v);
      } else {
        cand.note = "metric entry " + std::to_string(v - np + 1) + " is not determined by the equations";
        return false;
      }
    }
    std::sort(keep.begin(), keep.end());
    std::sort(pinned.begin(), pinned.end());
    return true;
  };
  const std::vector<double> x_lm = xd;
  auto resolve = [&]() -> bool {
    xd = x_lm;
    if (pinned.empty()) return true;
    for (auto k : pinned) xd[k] = 0.0;
    NewtonOptions lm_opt;
    lm_opt.residual_tol = 1e-13;
    const auto lm = levenberg_marquardt(dmodel, xd, gauge_d, lm_opt, keep);
    xd = lm.x;
    return lm.residual < 1e-9;
  };
  if (!(select(1e-2) && resolve())) {
    if (!select(0.0)) return false;
    resolve();
  }

  // Gauss-Newton on the kept unknowns at full precision.
  std::vector<mpf_class> x = to_mpf(xd);
  auto size = [&](const std::vector<mpf_class>& r) {
    mpf_class m = ctx(0);
    for (const auto& v : r)
      if (abs(v) > m) m = abs(v);
    return m;
  };
  auto r = model.residual(x, gauge);
  bool ok = false;
  for (int it = 0; it < 60; ++it) {
    if (size(r) < tol) {
      ok = true;
      break;
    }
    const auto j = jac(x, keep);
    const std::size_t m = keep.size();
    std::vector<std::vector<mpf_class>> a(m, std::vector<mpf_class>(m, ctx(0)));
    std::vector<mpf_class> g(m, ctx(0));
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t p = 0; p < m; ++p) {
        if (j[i][p] == 0) continue;
        g[p] -= j[i][p] * r[i];
        for (std::size_t q = 0; q < m; ++q) a[p][q] += j[i][p] * j[i][q];
      }
    if (!linear_solve(ctx, a, g, tiny)) {
      cand.note = "singular Jacobian during refinement";
      return false;
    }
    for (std::size_t k = 0; k < m; ++k) x[keep[k]] += g[k];
    r = model.residual(x, gauge);
  }
  if (!ok) {
    cand.note = "refinement did not converge";
    return false;
  }
  cand.refined.clear();
  for (const auto& v : x) cand.refined.push_back(mpf_string(v));
  cand.refined.push_back(mpf_string(gauge));
  for (std::size_t k = 0; k < np; ++k) cand.p[k] = x[k].get_d();
  for (std::size_t k = 0; k + 1 < u(n); ++k) cand.diag[k] = x[np + k].get_d();
  cand.residual = size(r).get_d();
  cand.gauge_fixed.clear();
  for (auto k : pinned) cand.gauge_fixed.push_back(names[k]);
  return true;
}

std::optional<Rational> reconstruct_rational(const std::string& value, int max_den_bits, int tol_bits,
                                             int precision_bits) {
  mpf_class f(0, static_cast<mp_bitcnt_t>(precision_bits));
  if (f.set_str(value, 10) != 0) throw ParseError("not a decimal number: " + value, 0);
  const mpq_class x(f);  // exact binary value
  mpq_class tol(1);
  tol /= mpq_class(mpz_class(1) << tol_bits);
  const mpz_class max_den = mpz_class(1) << max_den_bits;
  // Convergents h / k of the continued fraction of x.
  mpz_class h_prev = 0, h = 1, k_prev = 1, k = 0;
  mpq_class rest = x;
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) return std::nullopt;
    h_prev = std::exchange(h, h_next);
    k_prev = std::exchange(k, k_next);
    if (abs(x - mpq_class(h, k)) <= tol) return Rational(h, k);
    rest -= a;
    if (rest == 0) return Rational(h, k);
    rest = 1 / rest;
  }
}

Candidate certify(const LieAlgebra& lie, Candidate c, const ReconstructionOptions& opt) {
  const int n = lie.dim();
  const std::size_t np = u(n * (n - 1) / 2);
  if (c.p.size() != np || c.diag.size() != u(n)) throw DimensionError("wrong candidate size");
  std::vector<std::string> values = c.refined;
  int tol_bits = opt.precision_bits / 2;
  int prec = opt.precision_bits;
  if (values.empty()) {
    // Doubles only: 48 bits of agreement is all that can be asked.
    for (double v : c.p) values.push_back(mpf_string(mpf_class(v, 64)));
    for (double v : c.diag) values.push_back(mpf_string(mpf_class(v, 64)));
    tol_bits = 40;
    prec = 128;
  }
  std::vector<Rational> exact;
  for (const auto& v : values) {
    auto r = reconstruct_rational(v, opt.max_denominator_bits, tol_bits, prec);
    if (!r) {
      c.status = CandidateStatus::kEinsteinNumeric;
      c.note = "rational reconstruction exceeded the denominator budget";
      return c;
    }
    exact.push_back(*r);
  }
  std::vector<Rational> p(exact.begin(), exact.begin() + static_cast<std::ptrdiff_t>(np));
  std::vector<Rational> d(exact.begin() + static_cast<std::ptrdiff_t>(np), exact.end());
  for (const auto& x : d)
    if (x.is_zero()) {
      c.status = CandidateStatus::kEinsteinNumeric;
      c.note = "reconstructed metric is degenerate";
      return c;
    }
  const LieAlgebra f = change_of_basis(lie, frame_matrix(n, p), "f");
  std::vector<Scalar> ds(d.begin(), d.end());
  const PseudoMetric g(f.space(), ScalarMatrix::diagonal(ds));
  const auto res = einstein_check(f, g);
  if (!res.einstein || !res.lambda || !res.lambda->to_rational()) {
    c.status = CandidateStatus::kEinsteinNumeric;
    c.note = "exact Einstein check failed on the reconstructed metric";
    return c;
  }
  c.status = CandidateStatus::kEinsteinCertified;
  c.p_exact = std::move(p);
  c.diag_exact = std::move(d);
  c.lambda = *res.lambda->to_rational();
  c.obstruction_inequality = obstruction_dims(f, g).inequality_holds;
  c.note.clear();
  return c;
}

std::vector<Candidate> solve(const SearchConfig& config) {
  validate(config);
  if (config.newton.max_iter == 0) return {};
  const LieAlgebra& lie = config.algebra;
  const int n = lie.dim();
  const std::size_t np = u(n * (n - 1) / 2);
  const Model<DoubleCtx> model(lie, DoubleCtx{});
  std::vector<Candidate> out(config.seeds.size());

  auto run = [&](std::size_t index) {
    Candidate c;
    c.seed = config.seeds[index];
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<double> p(np), diag(u(n));
    if (config.center) {
      const auto& z = *config.center;
      for (std::size_t k = 0; k < np; ++k) p[k] = z[k] * (1 + config.radius * unit(rng)) + config.radius * 1e-3 * unit(rng);
      for (std::size_t k = 0; k < u(n); ++k) diag[k] = z[np + k] * (1 + config.radius * unit(rng));
    } else {
      std::uniform_real_distribution<double> pd(-2.0, 2.0);
      std::uniform_real_distribution<double> logd(std::log(0.25), std::log(4.0));
      for (auto& v : p) v = pd(rng);
      for (std::size_t k = 0; k < u(n); ++k) diag[k] = config.sign_pattern[k] * std::exp(logd(rng));
    }
    // Gauge: Ric is invariant under g -> t g, so the last entry is fixed.
    diag.back() = config.sign_pattern.back();
    const auto x0 = join(p, diag);
    const LmResult lm = levenberg_marquardt(model, x0, diag.back(), config.newton, all_indices(x0.size()));
    c.p.assign(lm.x.begin(), lm.x.begin() + static_cast<std::ptrdiff_t>(np));
    c.diag.assign(lm.x.begin() + static_cast<std::ptrdiff_t>(np), lm.x.end());
    c.diag.push_back(diag.back());
    c.residual = lm.residual;
    c.iterations = lm.iterations;
    classify(lie, c, config.newton.residual_tol, config.degeneracy_tol);
    if (c.status == CandidateStatus::kEinsteinNumeric) {
      for (std::size_t k = 0; k < u(n); ++k)
        if ((c.diag[k] > 0 ? 1 : -1) != config.sign_pattern[k]) c.note = "sign pattern not preserved";
      if (refine(lie, c, config.reconstruction.precision_bits) && config.certify)
        c = certify(lie, std::move(c), config.reconstruction);
    }
    out[index] = std::move(c);
  };

  const int threads = std::clamp(config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency()),
                                 1, std::max<int>(1, static_cast<int>(config.seeds.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(u(threads));
  auto worker = [&](int t) {
    try {
      for (std::size_t i = next++; i < config.seeds.size(); i = next++) run(i);
    } catch (...) {
      errors[u(t)] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace g2nil

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

#include "g2nil/hodge.hpp"

#include <algorithm>
#include <array>
#include <mutex>

#include "g2nil/errors.hpp"

namespace g2nil {

std::vector<Mask> monomials(int n, int k) {
  std::vector<Mask> out;
  const Mask limit = n >= 32 ? ~Mask{0} : (Mask{1} << n);
  // Gosper's hack enumerates k-subsets in increasing numeric order.
  if (k == 0) return {0};
  if (k > n) return out;
  Mask m = (Mask{1} << k) - 1;
  while (m < limit && m != 0) {
    out.push_back(m);
    const Mask c = m & -m;
    const Mask r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

Scalar monomial_inner(const ScalarMatrix& g, Mask i, Mask j) {
  const auto ri = mask_indices(i);
  const auto cj = mask_indices(j);
  if (ri.size() != cj.size()) throw DimensionError("inner product of monomials of different degree");
  const std::size_t k = ri.size();
  if (k == 0) return Scalar(1);
  auto at = [&](std::size_t a, std::size_t b) -> const Scalar& {
    return g(static_cast<std::size_t>(ri[a]), static_cast<std::size_t>(cj[b]));
  };
  if (k == 1) return at(0, 0);
  if (k == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  std::vector<std::size_t> rs(ri.begin(), ri.end()), cs(cj.begin(), cj.end());
  return bareiss_determinant(g.minor_matrix(rs, cs));
}

Scalar form_inner(const ScalarMatrix& g, const KForm& a, const KForm& b) {
  if (a.degree() != b.degree()) throw DimensionError("form_inner: degree mismatch");
  if (!(a.space() == b.space())) throw DimensionError("form_inner: different coframes");
  if (static_cast<int>(g.rows()) != a.space().dim || !g.is_square()) {
    throw DimensionError("form_inner: Gram matrix has the wrong size");
  }
  Scalar sum;
  for (const auto& [mi, ci] : a.terms()) {
    for (const auto& [mj, cj] : b.terms()) {
      const Scalar ip = monomial_inner(g, mi, mj);
      if (!ip.is_zero()) sum += ci * cj * ip;
    }
  }
  return sum;
}

// ---------------------------------------------------------------------------

struct HodgeStar::Tables {
  std::array<std::once_flag, kMaxDim + 1> once;
  std::array<std::vector<std::vector<Scalar>>, kMaxDim + 1> inner;
  std::array<std::vector<Mask>, kMaxDim + 1> basis;
};

HodgeStar::HodgeStar(const ScalarMatrix& frame_gram, KForm vol) {
  if (!frame_gram.is_square() || static_cast<int>(frame_gram.rows()) != vol.space().dim) {
    throw DimensionError("Hodge star: Gram matrix does not match the volume form");
  }
  try {
    dual_ = inverse(frame_gram);
  } catch (const DivisionByZeroError&) {
    throw SingularMetricError("Hodge star needs a nondegenerate metric");
  }
  *this = from_coframe_gram(dual_, std::move(vol));
}

HodgeStar HodgeStar::from_coframe_gram(const ScalarMatrix& coframe_gram, KForm vol) {
  if (vol.degree() != vol.space().dim || vol.is_zero()) {
    throw PreconditionError("Hodge star needs a nonzero top-degree volume form");
  }
  HodgeStar h;
  h.dual_ = coframe_gram;
  h.vol_ = std::move(vol);
  h.tables_ = std::make_shared<Tables>();
  return h;
}

const std::vector<std::vector<Scalar>>& HodgeStar::table(int k) const {
  auto& t = *tables_;
  std::call_once(t.once[static_cast<std::size_t>(k)], [&] {
    const auto basis = monomials(vol_.space().dim, k);
    std::vector<std::vector<Scalar>> m(basis.size(), std::vector<Scalar>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = a; b < basis.size(); ++b) {
        m[a][b] = monomial_inner(dual_, basis[a], basis[b]);
        if (a != b) m[b][a] = m[a][b];
      }
    }
    t.basis[static_cast<std::size_t>(k)] = basis;
    t.inner[static_cast<std::size_t>(k)] = std::move(m);
  });
  return t.inner[static_cast<std::size_t>(k)];
}

Scalar HodgeStar::inner(const KForm& a, const KForm& b) const {
  if (a.degree() != b.degree()) throw DimensionError("inner product: degree mismatch");
  if (!(a.space() == vol_.space()) || !(b.space() == vol_.space())) {
    throw DimensionError("inner product: form lives on another coframe");
  }
  const auto& tab = table(a.degree());
  const auto& basis = tables_->basis[static_cast<std::size_t>(a.degree())];
  auto index = [&](Mask m) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
  };
  Scalar sum;
  for (const auto& [mi, ci] : a.terms()) {
    const auto& row = tab[index(mi)];
    for (const auto& [mj, cj] : b.terms()) {
      const Scalar& ip = row[index(mj)];
      if (!ip.is_zero()) sum += ci * cj * ip;
    }
  }
  return sum;
}

KForm HodgeStar::operator()(const KForm& a) const {
  if (!(a.space() == vol_.space())) throw DimensionError("Hodge star: form lives on another coframe");
  const int n = vol_.space().dim;
  const int k = a.degree();
  const Mask full = vol_.space().full_mask();
  const Scalar delta = vol_.top_coefficient();
  const auto& tab = table(k);
  const auto& basis = tables_->basis[static_cast<std::size_t>(k)];
  auto index = [&](Mask m) {
    return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), m) - basis.begin());
  };
  KForm out(vol_.space(), n - k);
  for (std::size_t kk = 0; kk < basis.size(); ++kk) {
    const Mask km = basis[kk];
    Scalar c;
    for (const auto& [mi, ci] : a.terms()) {
      const Scalar& ip = tab[kk][index(mi)];
      if (!ip.is_zero()) c += ci * ip;
    }
    if (c.is_zero()) continue;
    const int s = wedge_sign(km, full & ~km);
    c *= delta;
    out.add_term(full & ~km, s > 0 ? c : -c);
  }
  return out;
}

}  // namespace g2nil

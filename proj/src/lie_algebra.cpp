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

#include "g2nil/lie_algebra.hpp"

#include <sstream>

#include "g2nil/errors.hpp"

namespace g2nil {

Subspace::Subspace(int ambient, const std::vector<std::vector<Scalar>>& spanning) : ambient_(ambient) {
  ScalarMatrix m(spanning.size(), static_cast<std::size_t>(ambient));
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (static_cast<int>(spanning[r].size()) != ambient) throw DimensionError("subspace vector length");
    for (int c = 0; c < ambient; ++c) m(r, static_cast<std::size_t>(c)) = spanning[r][static_cast<std::size_t>(c)];
  }
  const auto pivots = rref(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::vector<Scalar> row(static_cast<std::size_t>(ambient));
    for (int c = 0; c < ambient; ++c) row[static_cast<std::size_t>(c)] = m(r, static_cast<std::size_t>(c));
    basis_.push_back(std::move(row));
  }
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  auto rows = basis_;
  rows.push_back(v);
  return Subspace(ambient_, rows).dim() == dim();
}

std::string Subspace::str(const std::string& symbol) const {
  std::ostringstream os;
  os << "<";
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    if (r) os << ", ";
    bool first = true;
    for (int c = 0; c < ambient_; ++c) {
      const Scalar& x = basis_[r][static_cast<std::size_t>(c)];
      if (x.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (!x.is_one()) os << "(" << x << ")*";
      os << symbol << (c + 1);
    }
  }
  os << ">";
  return os.str();
}

// ---------------------------------------------------------------------------

LieAlgebra::LieAlgebra(Coframe space, std::vector<KForm> differentials)
    : space_(std::move(space)), d1_(std::move(differentials)) {
  if (static_cast<int>(d1_.size()) != space_.dim) {
    throw DimensionError("expected " + std::to_string(space_.dim) + " differentials, got " +
                         std::to_string(d1_.size()));
  }
  for (std::size_t k = 0; k < d1_.size(); ++k) {
    if (!(d1_[k].space() == space_) || d1_[k].degree() != 2) {
      throw DimensionError("differential of generator " + std::to_string(k + 1) + " is not a 2-form on the coframe");
    }
  }
  for (std::size_t k = 0; k < d1_.size(); ++k) {
    const KForm dd = d(d1_[k]);
    if (!dd.is_zero()) {
      throw NotALieAlgebraError("d^2 != 0 on generator " + space_.label(static_cast<int>(k)) +
                                    ": d(d" + space_.label(static_cast<int>(k)) + ") = " + dd.str(),
                                static_cast<int>(k) + 1);
    }
  }
}

Scalar LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i == j) return Scalar();
  const Scalar c = d1_.at(static_cast<std::size_t>(k)).coefficient(mask_of({i, j}));
  // de^k = -sum_{i<j} a^k_ij e^{ij}
  return i < j ? -c : c;
}

ScalarMatrix LieAlgebra::ad(const Vector& u) const {
  const auto n = static_cast<std::size_t>(space_.dim);
  ScalarMatrix m(n, n);
  for (int i = 0; i < space_.dim; ++i) {
    if (u[i].is_zero()) continue;
    for (int k = 0; k < space_.dim; ++k) {
      for (const auto& [mask, c] : d1_[static_cast<std::size_t>(k)].terms()) {
        if ((mask >> i & 1U) == 0) continue;
        const int j = std::countr_zero(mask & ~(Mask{1} << i));
        // a^k_ij = -c if i < j, +c otherwise.
        const Scalar a = i < j ? -c : c;
        m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) += u[i] * a;
      }
    }
  }
  return m;
}

Vector LieAlgebra::bracket(const Vector& u, const Vector& v) const {
  const ScalarMatrix a = ad(u);
  std::vector<Scalar> out(static_cast<std::size_t>(space_.dim));
  for (int k = 0; k < space_.dim; ++k)
    for (int j = 0; j < space_.dim; ++j)
      if (!v[j].is_zero()) out[static_cast<std::size_t>(k)] += a(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) * v[j];
  return Vector(space_, std::move(out));
}

KForm LieAlgebra::d(const KForm& a) const {
  if (!(a.space() == space_)) throw DimensionError("differential of a form on another coframe");
  if (a.degree() >= space_.dim) return KForm(space_, 0);  // d vanishes on top-degree forms
  KForm out(space_, a.degree() + 1);
  for (const auto& [mask, c] : a.terms()) {
    for (int i : mask_indices(mask)) {
      const Mask bit = Mask{1} << i;
      const Mask before = mask & (bit - 1);
      const Mask after = mask & ~(bit | (bit - 1));
      const int lead = std::popcount(before) % 2 == 0 ? 1 : -1;
      for (const auto& [p, dc] : d1_[static_cast<std::size_t>(i)].terms()) {
        const Mask rest = before | after;
        if ((p & rest) != 0) continue;
        const int s = lead * wedge_sign(before, p) * wedge_sign(before | p, after);
        const Scalar v = c * dc;
        out.add_term(rest | p, s > 0 ? v : -v);
      }
    }
  }
  return out;
}

KForm ce_differential(const LieAlgebra& lie, const KForm& a) { return lie.d(a); }

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_top_level(std::string_view text, std::vector<std::size_t>& offsets) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      parts.emplace_back(text.substr(start, i - start));
      offsets.push_back(start);
      start = i + 1;
    }
  }
  return parts;
}

}  // namespace

LieAlgebra parse_structure(std::string_view text, const std::string& symbol) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  if (lo < hi && text[lo] == '(') {
    if (text[hi - 1] != ')') throw ParseError("unbalanced parenthesis", hi);
    ++lo;
    --hi;
  }
  const std::string_view body = text.substr(lo, hi - lo);
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("empty structure equations", lo);
  std::vector<std::size_t> offsets;
  const auto parts = split_top_level(body, offsets);
  const int n = static_cast<int>(parts.size());
  if (n > 9) throw DimensionError("single-digit index literals support at most 9 generators");
  const Coframe space(n, symbol);
  std::vector<KForm> d1;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    try {
      d1.push_back(parse_form(space, parts[k], 2, true));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" (at position"));
      throw ParseError("generator " + std::to_string(k + 1) + ": " + msg, lo + offsets[k] + e.position());
    }
  }
  return LieAlgebra(space, std::move(d1));
}

std::string structure_string(const LieAlgebra& lie) {
  std::string out;
  for (std::size_t k = 0; k < lie.differentials().size(); ++k) {
    if (k) out += ",";
    out += lie.differentials()[k].str();
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

Scalar trace(const ScalarMatrix& m) {
  Scalar t;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

StructureReport structure_report(const LieAlgebra& lie) {
  const int n = lie.dim();
  const auto un = static_cast<std::size_t>(n);
  StructureReport rep;
  std::vector<ScalarMatrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(lie.ad(i));

  // Center: v with sum_i v_i ad(e_i) = 0.
  ScalarMatrix cm(un * un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t k = 0; k < un; ++k) cm(j * un + k, i) = ads[i](k, j);
  rep.center = Subspace(n, kernel(cm));

  // Lower central series.
  std::vector<std::vector<Scalar>> current;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> e(un);
    e[static_cast<std::size_t>(i)] = Scalar(1);
    current.push_back(std::move(e));
  }
  Subspace level(n, current);
  rep.lower_central_dims.push_back(level.dim());
  for (int guard = 0; guard <= n && level.dim() > 0; ++guard) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& b : level.basis()) {
      const Vector bv(lie.space(), b);
      for (int i = 0; i < n; ++i) {
        const auto comp = lie.bracket(Vector::basis(lie.space(), i), bv).components();
        next.push_back(comp);
      }
    }
    Subspace nxt(n, next);
    if (rep.lower_central_dims.size() == 1) rep.derived = nxt;
    if (nxt.dim() == level.dim()) break;
    level = nxt;
    rep.lower_central_dims.push_back(level.dim());
  }
  rep.nilpotent = rep.lower_central_dims.back() == 0;
  rep.step = rep.nilpotent ? static_cast<int>(rep.lower_central_dims.size()) - 1 : 0;

  rep.unimodular = true;
  for (const auto& a : ads)
    if (!trace(a).is_zero()) rep.unimodular = false;

  rep.killing = ScalarMatrix(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i; j < un; ++j) {
      rep.killing(i, j) = trace(ads[i] * ads[j]);
      rep.killing(j, i) = rep.killing(i, j);
    }
  rep.killing_zero = rep.killing.is_zero();
  return rep;
}

NiceBasisReport is_nice_basis(const LieAlgebra& lie) {
  const int n = lie.dim();
  NiceBasisReport rep;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int hits = 0;
      for (int k = 0; k < n; ++k)
        if (!lie.structure_constant(i, j, k).is_zero()) ++hits;
      if (hits > 1) rep.multiple_targets.emplace_back(i + 1, j + 1);
    }
  }
  for (int k = 0; k < n; ++k) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!lie.structure_constant(i, j, k).is_zero()) pairs.emplace_back(i, j);
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        const auto [i, j] = pairs[a];
        const auto [l, m] = pairs[b];
        const int shared = (i == l) + (i == m) + (j == l) + (j == m);
        if (shared == 1) rep.overlaps.push_back({{i + 1, j + 1}, {l + 1, m + 1}, k + 1});
      }
    }
  }
  rep.nice = rep.multiple_targets.empty() && rep.overlaps.empty();
  return rep;
}

std::vector<ScalarMatrix> derivations(const LieAlgebra& lie) {
  const int n = lie.dim();
  const auto un = static_cast<std::size_t>(n);
  // Unknown D(r, s) lives at column r * n + s.
  std::vector<std::vector<Scalar>> rows;
  auto c = [&](int i, int j, int k) { return lie.structure_constant(i, j, k); };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int k = 0; k < n; ++k) {
        std::vector<Scalar> row(un * un);
        bool any = false;
        auto add = [&](int r, int s, const Scalar& v) {
          if (v.is_zero()) return;
          row[static_cast<std::size_t>(r) * un + static_cast<std::size_t>(s)] += v;
          any = true;
        };
        for (int m = 0; m < n; ++m) add(k, m, c(a, b, m));
        for (int i = 0; i < n; ++i) {
          add(i, a, -c(i, b, k));
          add(i, b, -c(a, i, k));
        }
        if (any) rows.push_back(std::move(row));
      }
    }
  }
  ScalarMatrix sys(rows.size(), un * un);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t col = 0; col < un * un; ++col) sys(r, col) = rows[r][col];
  std::vector<ScalarMatrix> out;
  for (const auto& v : kernel(sys)) {
    ScalarMatrix d(un, un);
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t s = 0; s < un; ++s) d(r, s) = v[r * un + s];
    out.push_back(std::move(d));
  }
  return out;
}

bool derivations_traceless(const LieAlgebra& lie) {
  for (const auto& d : derivations(lie))
    if (!trace(d).is_zero()) return false;
  return true;
}

LieAlgebra change_of_basis(const LieAlgebra& lie, const ScalarMatrix& m, const std::string& symbol) {
  const int n = lie.dim();
  if (static_cast<int>(m.rows()) != n || !m.is_square()) throw DimensionError("change of basis matrix size");
  const ScalarMatrix minv = inverse(m);
  const Coframe target(n, symbol.empty() ? lie.space().symbol : symbol);
  std::vector<KForm> d1;
  for (int j = 0; j < n; ++j) {
    // f^j = sum_i minv(j, i) e^i
    KForm df(lie.space(), 2);
    for (int i = 0; i < n; ++i) {
      const Scalar& c = minv(static_cast<std::size_t>(j), static_cast<std::size_t>(i));
      if (!c.is_zero()) df += c * lie.differentials()[static_cast<std::size_t>(i)];
    }
    d1.push_back(change_coframe(df, m, target));
  }
  return LieAlgebra(target, std::move(d1));
}

}  // namespace g2nil

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

#include "g2nil/g2star.hpp"

#include "g2nil/errors.hpp"

namespace g2nil {

namespace {

void require_seven(const KForm& phi) {
  if (phi.space().dim != 7 || phi.degree() != 3) {
    throw DimensionError("expected a 3-form on a 7-dimensional space");
  }
}

KForm from_literal(const Coframe& space, const char* text) {
  // Literals are written with the symbol "v"; relabel onto `space`.
  const KForm f = parse_form(Coframe(7, "v"), text);
  KForm out(space, f.degree());
  for (const auto& [m, c] : f.terms()) out.add_term(m, c);
  return out;
}

std::vector<Scalar> coefficients(const KForm& f, const std::vector<Mask>& basis) {
  std::vector<Scalar> out;
  out.reserve(basis.size());
  for (Mask m : basis) out.push_back(f.coefficient(m));
  return out;
}

}  // namespace

std::string to_string(OrbitClass c) {
  switch (c) {
    case OrbitClass::kPositiveDefinite:
      return "PositiveDefinite";
    case OrbitClass::kIndefinite:
      return "Indefinite";
    case OrbitClass::kDegenerate:
      return "Degenerate";
  }
  return "?";
}

Scalar top_pairing(const KForm& a, const KForm& b) {
  if (!(a.space() == b.space()) || a.degree() + b.degree() != a.space().dim) {
    throw DimensionError("top pairing needs complementary degrees on one coframe");
  }
  const Mask full = a.space().full_mask();
  Scalar s;
  for (const auto& [m, c] : a.terms()) {
    const Scalar other = b.coefficient(full & ~m);
    if (other.is_zero()) continue;
    const Scalar v = c * other;
    s += wedge_sign(m, full & ~m) > 0 ? v : -v;
  }
  return s;
}

ScalarMatrix b_form(const KForm& phi) {
  require_seven(phi);
  std::vector<KForm> iphi, iphi_phi;
  for (int i = 0; i < 7; ++i) {
    iphi.push_back(contract_basis(i, phi));
    iphi_phi.push_back(wedge(iphi.back(), phi));
  }
  ScalarMatrix b(7, 7);
  const Scalar sixth = Scalar(frac(1, 6));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i; j < 7; ++j) {
      b(i, j) = sixth * top_pairing(iphi[j], iphi_phi[i]);
      b(j, i) = b(i, j);
    }
  return b;
}

OrbitClass stability_class(const KForm& phi) {
  const ScalarMatrix b = b_form(phi);
  const auto [p, q, z] = signature(b);
  if (z > 0) return OrbitClass::kDegenerate;
  return (p == 0 || q == 0) ? OrbitClass::kPositiveDefinite : OrbitClass::kIndefinite;
}

KForm standard_phi(const Coframe& space) {
  if (space.dim != 7) throw DimensionError("the adapted 3-form needs a 7-dimensional space");
  return from_literal(space, "-v127 - v347 + v567 + v135 - v146 - v236 - v245");
}

KForm standard_star_phi(const Coframe& space) {
  if (space.dim != 7) throw DimensionError("the adapted 4-form needs a 7-dimensional space");
  return from_literal(space, "v1234 - v1256 - v3456 - v2467 + v2357 + v1457 + v1367");
}

// ---------------------------------------------------------------------------

G2StarStructure::G2StarStructure(KForm phi) : phi_(std::move(phi)) {
  require_seven(phi_);
  b_ = b_form(phi_);
  det_ = bareiss_determinant(b_);
  if (det_.is_zero()) throw InstabilityError("3-form is not stable: det b = 0");
  const auto d = det_.to_rational();
  if (!d) throw PreconditionError("volume needs a rational det b");
  delta_ = Scalar::ninth_root_of(*d);
  vol_ = KForm::volume(space(), delta_);

  const Scalar inv_delta = delta_.inverse();
  ScalarMatrix gram(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) gram(i, j) = b_(i, j) * inv_delta;
  metric_ = PseudoMetric(space(), gram);
  const auto& sig = *metric_.signature();
  class_ = (sig.positive == 0 || sig.negative == 0) ? OrbitClass::kPositiveDefinite : OrbitClass::kIndefinite;

  // g^{-1} = delta * b^{-1}, computed over Q before adjoining delta.
  const ScalarMatrix binv = inverse(b_);
  ScalarMatrix dual(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) dual(i, j) = binv(i, j) * delta_;
  star_ = HodgeStar::from_coframe_gram(dual, vol_);
  star_phi_ = star_(phi_);
}

// ---------------------------------------------------------------------------

Decomposition2 decompose2(const G2StarStructure& s, const KForm& beta) {
  if (beta.degree() != 2) throw DimensionError("decompose2 expects a 2-form");
  const auto six = monomials(7, 6);
  const KForm& psi = s.star_phi();
  std::vector<KForm> images;
  ScalarMatrix m(7, 7);
  for (int i = 0; i < 7; ++i) {
    images.push_back(s.star(wedge(KForm::monomial(s.space(), {i}), psi)));
    const auto col = coefficients(wedge(images.back(), psi), six);
    for (std::size_t r = 0; r < 7; ++r) m(r, static_cast<std::size_t>(i)) = col[r];
  }
  const auto a = solve(m, coefficients(wedge(beta, psi), six));
  Decomposition2 out;
  out.alpha = KForm::one_form(s.space(), a);
  out.omega7 = KForm(s.space(), 2);
  for (int i = 0; i < 7; ++i) out.omega7 += a[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(i)];
  out.omega14 = beta - out.omega7;
  return out;
}

Decomposition3 decompose3(const G2StarStructure& s, const KForm& gamma) {
  if (gamma.degree() != 3) throw DimensionError("decompose3 expects a 3-form");
  const auto six = monomials(7, 6);
  const KForm& phi = s.phi();
  const KForm& psi = s.star_phi();
  ScalarMatrix m(8, 8);
  // Column 0: phi itself (phi ^ phi = 0 identically).
  m(7, 0) = top_pairing(phi, psi);
  std::vector<KForm> images;
  for (int i = 0; i < 7; ++i) {
    images.push_back(s.star(wedge(KForm::monomial(s.space(), {i}), phi)));
    const auto col = coefficients(wedge(images.back(), phi), six);
    const auto c = static_cast<std::size_t>(i + 1);
    for (std::size_t r = 0; r < 7; ++r) m(r, c) = col[r];
    m(7, c) = top_pairing(images.back(), psi);
  }
  auto rhs = coefficients(wedge(gamma, phi), six);
  rhs.push_back(top_pairing(gamma, psi));
  const auto x = solve(m, rhs);
  Decomposition3 out;
  out.f = x[0];
  std::vector<Scalar> a(x.begin() + 1, x.end());
  out.alpha = KForm::one_form(s.space(), a);
  KForm rest = gamma - out.f * phi;
  for (int i = 0; i < 7; ++i) rest -= a[static_cast<std::size_t>(i)] * images[static_cast<std::size_t>(i)];
  out.g27 = rest;
  return out;
}

TorsionForms torsion_forms(const LieAlgebra& lie, const G2StarStructure& s) {
  const KForm dphi = lie.d(s.phi());
  const KForm dpsi = lie.d(s.star_phi());
  const Decomposition3 parts = decompose3(s, s.star(dphi));
  TorsionForms t;
  t.tau0 = parts.f;
  t.tau1 = Scalar(frac(1, 3)) * parts.alpha;
  t.tau3 = parts.g27;
  t.tau2 = s.star(Scalar(4) * wedge(t.tau1, s.star_phi()) - dpsi);
  return t;
}

KForm torsion_closed(const LieAlgebra& lie, const G2StarStructure& s) {
  if (!lie.d(s.phi()).is_zero()) throw PreconditionError("torsion_closed needs d phi = 0");
  const KForm dpsi = lie.d(s.star_phi());
  KForm tau = -s.star(dpsi);
  if (!decompose2(s, tau).omega7.is_zero()) throw Error("closed torsion has an Omega^2_7 component");
  if (!(wedge(tau, s.phi()) == dpsi)) throw Error("closed torsion violates tau ^ phi = d*phi");
  return tau;
}

KForm codifferential(const LieAlgebra& lie, const G2StarStructure& s, const KForm& a) {
  const int n = s.space().dim;
  const int k = a.degree();
  if (k == 0) throw DimensionError("codifferential of a 0-form");
  const KForm out = s.star(lie.d(s.star(a)));
  return ((n * (k + 1) + 1) % 2 == 0) ? out : -out;
}

KForm laplacian(const LieAlgebra& lie, const G2StarStructure& s, const KForm& a) {
  const int n = s.space().dim;
  const int k = a.degree();
  KForm out(s.space(), k);
  if (k > 0) out += lie.d(codifferential(lie, s, a));
  if (k < n) {
    const KForm da = lie.d(a);
    if (!da.is_zero()) out += codifferential(lie, s, da);
  }
  return out;
}

HarmonicReport harmonic_report(const LieAlgebra& lie, const G2StarStructure& s) {
  HarmonicReport r;
  r.d_phi = lie.d(s.phi());
  r.d_star_phi = lie.d(s.star_phi());
  r.closed = r.d_phi.is_zero();
  r.coclosed = r.d_star_phi.is_zero();
  r.delta_phi = codifferential(lie, s, s.phi());
  r.laplacian_phi = lie.d(r.delta_phi);
  if (!r.closed) r.laplacian_phi += codifferential(lie, s, r.d_phi);
  r.harmonic = r.laplacian_phi.is_zero();
  return r;
}

Scalar scal_from_torsion(const LieAlgebra& lie, const G2StarStructure& s) {
  const KForm tau = torsion_closed(lie, s);
  return Scalar(frac(-1, 2)) * s.inner(tau, tau);
}

}  // namespace g2nil

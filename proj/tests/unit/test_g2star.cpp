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

// Induced metrics, torsion, Laplacian and the worked examples on g and n.

#include "doctest.h"
#include "g2nil/errors.hpp"
#include "g2nil/g2star.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::testing;

namespace {

Scalar q(long p, long d = 1) { return Scalar(frac(p, d)); }

}  // namespace

TEST_CASE("the adapted 3-form induces the standard split structure") {
  const Coframe e(7);
  const G2StarStructure s(standard_phi(e));
  CHECK(s.orbit_class() == OrbitClass::kIndefinite);
  CHECK(s.delta().is_rational());
  CHECK(s.metric().signature() == Signature{3, 4, 0});
  CHECK(s.star_phi() == standard_star_phi(e));
  CHECK(stability_class(standard_phi(e)) == OrbitClass::kIndefinite);
}

TEST_CASE("b_phi agrees with the defining contraction formula") {
  Rng rng(17);
  const Coframe e(7);
  for (int c = 0; c < 25; ++c) {
    const KForm phi = random_adapted_phi(e, rng);
    const ScalarMatrix b = b_form(phi);
    const Vector v = random_vector(e, rng), w = random_vector(e, rng);
    Scalar bvw;
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) bvw += v[i] * b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * w[j];
    const KForm top = wedge(wedge(contract(v, phi), contract(w, phi)), phi);
    CHECK(bvw * q(6) == top.top_coefficient());
  }
}

TEST_CASE("g_phi vol_phi = b_phi entrywise, also over ninth-root fields") {
  Rng rng(23);
  const LieAlgebra g = parse_structure(kAlgebraG);
  const KForm phi = parse_form(g.space(), kPhiG);
  for (int c = 0; c < 6; ++c) {
    const KForm member = phi + Scalar(random_unit(rng, 2, 3)) * random_form(g.space(), 3, rng, 0.1);
    if (stability_class(member) == OrbitClass::kDegenerate) continue;
    const G2StarStructure s(member);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) CHECK(s.metric().gram()(i, j) * s.delta() == s.bmatrix()(i, j));
  }
}

TEST_CASE("degenerate 3-forms are rejected") {
  const Coframe e(7);
  CHECK(stability_class(parse_form(e, "e123")) == OrbitClass::kDegenerate);
  CHECK_THROWS_AS(G2StarStructure(parse_form(e, "e123+e456")), InstabilityError);
}

TEST_CASE("Omega^2_14 has both characterizations") {
  Rng rng(29);
  const G2StarStructure s(random_adapted_phi(Coframe(7), rng));
  for (int c = 0; c < 40; ++c) {
    const KForm beta = random_form(s.space(), 2, rng);
    const Decomposition2 d = decompose2(s, beta);
    CHECK(d.omega7 + d.omega14 == beta);
    CHECK(wedge(d.omega14, s.star_phi()).is_zero());
    CHECK(wedge(d.omega14, s.phi()) == -s.star(d.omega14));
    CHECK(d.omega7 == s.star(wedge(d.alpha, s.star_phi())));
  }
}

TEST_CASE("torsion identities for random structures on g") {
  Rng rng(31);
  const LieAlgebra g = parse_structure(kAlgebraG);
  for (int c = 0; c < 6; ++c) {
    const G2StarStructure s(random_adapted_phi(g.space(), rng));
    const TorsionForms t = torsion_forms(g, s);
    CHECK(g.d(s.phi()) == t.tau0 * s.star_phi() + q(3) * wedge(t.tau1, s.phi()) + s.star(t.tau3));
    CHECK(g.d(s.star_phi()) == q(4) * wedge(t.tau1, s.star_phi()) - s.star(t.tau2));
  }
}

TEST_CASE("closed harmonic structure on g") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const G2StarStructure s(parse_form(g.space(), kPhiG));
  const HarmonicReport h = harmonic_report(g, s);
  CHECK(h.closed);
  CHECK_FALSE(h.coclosed);
  CHECK(h.harmonic);
  const KForm tau = torsion_closed(g, s);
  CHECK(tau == -parse_form(g.space(), "5/2*e12-3/2*e13+e14+e15-e23"));
  // tau is nonzero but null: g(tau, tau) = 0 does not force tau = 0.
  CHECK_FALSE(tau.is_zero());
  CHECK(wedge(tau, s.star(tau)).is_zero());
  CHECK(s.inner(tau, tau).is_zero());
  CHECK(g.d(tau).is_zero());

  const ScalarMatrix h_gram = h_frame().transposed() * s.metric().gram() * h_frame();
  CHECK(h_gram == ScalarMatrix::diagonal({q(-1), q(-1), q(-1), q(-1), q(1), q(1), q(1)}));
  const EinsteinResult e = einstein_check(g, s.metric());
  CHECK_FALSE(e.einstein);
  CHECK(e.scal.is_zero());
  CHECK(scal_from_torsion(g, s).is_zero());
}

TEST_CASE("closed harmonic Ricci-flat structure on n") {
  const LieAlgebra n = parse_structure(kAlgebraN);
  const G2StarStructure s(parse_form(n.space(), kPsiN));
  const HarmonicReport h = harmonic_report(n, s);
  CHECK(h.closed);
  CHECK_FALSE(h.coclosed);
  CHECK(h.harmonic);
  CHECK(h.d_star_phi == -parse_form(n.space(), "e13457"));
  CHECK(s.star(h.d_star_phi) == parse_form(n.space(), "e15"));
  CHECK(ricci(n, s.metric()) == ScalarMatrix(7, 7));
  CHECK_FALSE(riemann(n, s.metric()).is_zero());
}

TEST_CASE("closed member with cubic det b: ninth root reduces to a cube root") {
  // det b of this closed form on g is a rational cube but not a ninth power.
  const LieAlgebra g = parse_structure(kAlgebraG);
  const KForm phi = parse_form(g.space(),
                               "1/5*e123+2/5*e124-2/5*e134-1/5*e234-2/5*e125+2/5*e135+3/5*e235+1/5*e145+2*e345"
                               "+2/5*e126+2/5*e136+2/5*e236+1/5*e146+1/5*e246+9/5*e156-4/5*e256-2/5*e127"
                               "+4/5*e137-3/5*e237+2/5*e247-11/5*e157+2/5*e167");
  REQUIRE(g.d(phi).is_zero());
  const G2StarStructure s(phi);
  const Scalar d3 = s.delta() * s.delta() * s.delta();
  CHECK(d3.to_rational().has_value());
  const KForm tau = torsion_closed(g, s);
  CHECK(wedge(tau, s.phi()) == g.d(s.star_phi()));
  CHECK(scal_from_torsion(g, s) == einstein_check(g, s.metric()).scal);
}

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

#include "support/properties.hpp"

#include <exception>

#include "g2nil/hodge.hpp"
#include "support/fixtures.hpp"

namespace g2nil::testing {

namespace {

void fail(PropertyOutcome& out, const std::string& what) {
  if (out.failures++ == 0) out.first_failure = what;
}

template <typename Body>
PropertyOutcome run(const std::string& name, int cases, Body body) {
  PropertyOutcome out{name, 0, 0, {}};
  for (int c = 0; c < cases; ++c) {
    ++out.cases;
    try {
      body(c, out);
    } catch (const std::exception& e) {
      fail(out, "case " + std::to_string(c) + " threw: " + e.what());
    }
  }
  return out;
}

Scalar sign_power(int e) { return Scalar(Rational(e % 2 == 0 ? 1 : -1)); }

}  // namespace

PropertyOutcome property_d_squared(std::uint64_t seed, int cases) {
  const std::vector<LieAlgebra> algebras = {parse_structure(kAlgebraG), parse_structure(kAlgebraN),
                                            parse_structure(kAlgebraNice), parse_structure("0,0,12,13,23")};
  Rng rng(seed);
  return run("d^2 = 0", cases, [&](int c, PropertyOutcome& out) {
    const LieAlgebra& lie = algebras[static_cast<std::size_t>(c) % algebras.size()];
    std::uniform_int_distribution<int> deg(0, lie.dim() - 2);
    const KForm a = random_form(lie.space(), deg(rng), rng);
    if (!lie.d(lie.d(a)).is_zero()) fail(out, "d^2 a != 0 for a = " + a.str() + " on " + structure_string(lie));
  });
}

PropertyOutcome property_star_star(std::uint64_t seed, int cases) {
  const Coframe space(7);
  Rng rng(seed);
  std::uniform_int_distribution<int> deg(0, 7);
  return run("** = id, <a,a> vol = a ^ *a", cases, [&](int c, PropertyOutcome& out) {
    HodgeStar star;
    if (c % 2 == 0) {
      star = G2StarStructure(random_adapted_phi(space, rng)).hodge();
    } else {
      const RandomMetric g = random_metric(7, 4, rng);
      star = HodgeStar(g.gram, KForm::volume(space, g.volume));
    }
    const KForm a = random_form(space, deg(rng), rng);
    if (!(star(star(a)) == a)) fail(out, "**a != a for a = " + a.str());
    if (!(star.inner(a, a) * star.volume() == wedge(a, star(a))))
      fail(out, "<a,a> vol != a ^ *a for a = " + a.str());
  });
}

PropertyOutcome property_wedge_contraction(std::uint64_t seed, int cases) {
  const Coframe space(7);
  Rng rng(seed);
  std::uniform_int_distribution<int> deg(0, 4);
  return run("wedge / contraction identities", cases, [&](int, PropertyOutcome& out) {
    const int p = deg(rng), q = deg(rng);
    const KForm a = random_form(space, p, rng), b = random_form(space, q, rng);
    const KForm c = random_form(space, deg(rng) % 3, rng);
    const Vector v = random_vector(space, rng);
    if (!(wedge(a, b) == sign_power(p * q) * wedge(b, a))) fail(out, "anticommutativity: " + a.str() + ", " + b.str());
    if (!(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)))) fail(out, "associativity: " + a.str() + ", " + b.str());
    const KForm lhs = contract(v, wedge(a, b));
    const KForm rhs = wedge(contract(v, a), b) + sign_power(p) * wedge(a, contract(v, b));
    if (!(lhs == rhs)) fail(out, "antiderivation: " + a.str() + ", " + b.str());
    if (p > 1 && !contract(v, contract(v, a)).is_zero()) fail(out, "i_v i_v a != 0 for a = " + a.str());
  });
}

PropertyOutcome property_curvature(std::uint64_t seed, int cases) {
  const std::vector<LieAlgebra> algebras = {parse_structure(kAlgebraG), parse_structure(kAlgebraN)};
  Rng rng(seed);
  return run("curvature symmetries", cases, [&](int c, PropertyOutcome& out) {
    const LieAlgebra& lie = algebras[static_cast<std::size_t>(c) % 2];
    const PseudoMetric g(lie.space(), random_gram(7, rng));
    const Connection nabla = levi_civita(lie, g);
    const CurvatureTensor r = riemann(lie, g);
    const int n = 7;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (!(nabla(i, j, k) - nabla(j, i, k) == lie.structure_constant(i, j, k)))
            return fail(out, "torsion at " + std::to_string(i) + std::to_string(j) + std::to_string(k));
          Scalar compat;
          for (int m = 0; m < n; ++m) compat += nabla(i, j, m) * g(m, k) + nabla(i, k, m) * g(j, m);
          if (!compat.is_zero()) return fail(out, "metric compatibility violated");
          for (int l = 0; l < n; ++l) {
            const Scalar& x = r(i, j, k, l);
            if (!(x == -r(j, i, k, l)) || !(x == -r(i, j, l, k)) || !(x == r(k, l, i, j)))
              return fail(out, "pair symmetry violated");
            if (!(x + r(j, k, i, l) + r(k, i, j, l)).is_zero()) return fail(out, "first Bianchi violated");
          }
        }
  });
}

PropertyOutcome property_ricci_modes(std::uint64_t seed, int cases) {
  const std::vector<LieAlgebra> algebras = {parse_structure(kAlgebraG), parse_structure(kAlgebraN)};
  Rng rng(seed);
  return run("ricci mode agreement", cases, [&](int c, PropertyOutcome& out) {
    const LieAlgebra& lie = algebras[static_cast<std::size_t>(c) % 2];
    const PseudoMetric g(lie.space(), random_gram(7, rng));
    if (!(ricci(lie, g, RicciMode::kGeneral) == ricci(lie, g, RicciMode::kNilpotent)))
      fail(out, "ricci modes differ on " + structure_string(lie));
  });
}

}  // namespace g2nil::testing

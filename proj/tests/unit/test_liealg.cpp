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

// Structure equations, Chevalley-Eilenberg differential and invariants.

#include "doctest.h"
#include "g2nil/errors.hpp"
#include "g2nil/lie_algebra.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::testing;

TEST_CASE("structure literals: '12' means de = e1 ^ e2") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  CHECK(g.dim() == 7);
  CHECK(g.d(parse_form(g.space(), "e3")) == parse_form(g.space(), "e12"));
  CHECK(g.d(parse_form(g.space(), "e7")) == parse_form(g.space(), "e16+e23+e24"));
  CHECK(parse_structure(structure_string(g)) == g);
  CHECK(parse_structure("(0, 0, e12, 13, 14, 15+23, 16+23+24)") == g);
}

TEST_CASE("bracket sign: ad(e5) = e^1 (x) e6 on g") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const ScalarMatrix ad5 = g.ad(4);
  ScalarMatrix expected(7, 7);
  expected(5, 0) = Scalar(frac(1, 1));
  CHECK(ad5 == expected);
  // de^k(e_i, e_j) = -a^k_ij.
  CHECK(g.structure_constant(0, 1, 2) == Scalar(frac(-1, 1)));
}

TEST_CASE("structure equations violating Jacobi are rejected") {
  CHECK_THROWS_AS(parse_structure("0,0,0,12,34"), NotALieAlgebraError);
  CHECK_THROWS_AS(parse_structure("0,0,12,1x"), ParseError);
}

TEST_CASE("change of basis round-trips") {
  Rng rng(3);
  for (const char* s : {kAlgebraG, kAlgebraN, kAlgebraNice}) {
    const LieAlgebra lie = parse_structure(s);
    for (int i = 0; i < 10; ++i) {
      const ScalarMatrix m = random_invertible(7, rng);
      const LieAlgebra f = change_of_basis(lie, m, "f");
      CHECK(change_of_basis(f, inverse(m), "e") == lie);
      CHECK(structure_report(f).lower_central_dims == structure_report(lie).lower_central_dims);
    }
  }
}

TEST_CASE("g in the Einstein coframe") {
  const LieAlgebra f = change_of_basis(parse_structure(kAlgebraG), einstein_frame(), "f");
  CHECK(f == parse_structure("0,0,f12,f13,f14-24/17*f13,46/51*f14+f15+f23,50/51*f15+f16+25/17*f23+f24", "f"));
}

TEST_CASE("invariants of g") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const StructureReport r = structure_report(g);
  CHECK(r.nilpotent);
  CHECK(r.unimodular);
  CHECK(r.killing_zero);
  CHECK(r.derived.dim() - r.center.dim() == 4);
  CHECK(r.lower_central_dims == std::vector<int>{7, 5, 4, 3, 2, 1, 0});
  CHECK(r.step == 6);
}

TEST_CASE("Killing form vanishes on every nilpotent reference algebra") {
  for (const char* s : {kAlgebraG, kAlgebraN, kAlgebraNice, "0,0,12"}) CHECK(structure_report(parse_structure(s)).killing_zero);
}

TEST_CASE("nice bases") {
  CHECK(is_nice_basis(parse_structure(kAlgebraNice)).nice);
  const NiceBasisReport g = is_nice_basis(parse_structure(kAlgebraG));
  CHECK_FALSE(g.nice);
}

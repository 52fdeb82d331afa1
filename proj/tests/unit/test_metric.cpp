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

// Levi-Civita connection, curvature, Ricci and the obstruction data.

#include "doctest.h"
#include "g2nil/errors.hpp"
#include "g2nil/metric.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::testing;

namespace {

Scalar q(long p, long d = 1) { return Scalar(frac(p, d)); }

}  // namespace

TEST_CASE("Heisenberg algebra with the orthonormal metric") {
  // [e1, e2] = -e3 under the structure-equation convention; Ric is
  // diag(-1/2, -1/2, 1/2) independently of that sign.
  const LieAlgebra h = parse_structure("0,0,12");
  const PseudoMetric g(h.space(), ScalarMatrix::identity(3));
  const ScalarMatrix expected = ScalarMatrix::diagonal({q(-1, 2), q(-1, 2), q(1, 2)});
  CHECK(ricci(h, g, RicciMode::kGeneral) == expected);
  CHECK(ricci(h, g, RicciMode::kNilpotent) == expected);
  CHECK(einstein_check(h, g).scal == q(-1, 2));
}

TEST_CASE("abelian algebras are flat") {
  const LieAlgebra a = parse_structure("0,0,0,0");
  Rng rng(1);
  const PseudoMetric g(a.space(), random_gram(4, rng));
  CHECK(riemann(a, g).is_zero());
}

TEST_CASE("Einstein metric on g: Ric = lambda g in both modes") {
  const LieAlgebra f = change_of_basis(parse_structure(kAlgebraG), einstein_frame(), "f");
  const PseudoMetric g = PseudoMetric::diagonal(f.space(), einstein_diagonal());
  for (RicciMode mode : {RicciMode::kGeneral, RicciMode::kNilpotent}) {
    const EinsteinResult e = einstein_check(f, g, mode);
    REQUIRE(e.einstein);
    CHECK(*e.lambda == Scalar(einstein_lambda()));
    CHECK(e.scal == Scalar(einstein_lambda() * frac(7, 1)));
  }
  CHECK(g.signature() == Signature{3, 4, 0});
}

TEST_CASE("trace of the Einstein Gram diagonal") {
  // The diagonal sums to this value, not to -1; kept as a regression value.
  Scalar sum;
  for (const Scalar& d : einstein_diagonal()) sum += d;
  CHECK(sum == Scalar(Rational::parse("-758688166904322013/505133479678202787")));
  CHECK_FALSE(sum == q(-1));
}

TEST_CASE("obstruction inequality fails for the non-Ricci-flat Einstein metric") {
  const LieAlgebra f = change_of_basis(parse_structure(kAlgebraG), einstein_frame(), "f");
  const PseudoMetric g = PseudoMetric::diagonal(f.space(), einstein_diagonal());
  CHECK_FALSE(obstruction_dims(f, g).inequality_holds);
}

TEST_CASE("degenerate metrics are rejected") {
  const LieAlgebra h = parse_structure("0,0,12");
  const PseudoMetric g = PseudoMetric::diagonal(h.space(), {q(1), q(0), q(1)});
  CHECK(g.is_degenerate());
  CHECK_THROWS_AS(ricci(h, g), SingularMetricError);
}

TEST_CASE("nilpotent Ricci formula refuses non-unimodular algebras") {
  const LieAlgebra s = parse_structure("0,12");  // de2 = e1 ^ e2
  const PseudoMetric g(s.space(), ScalarMatrix::identity(2));
  CHECK_THROWS_AS(ricci(s, g, RicciMode::kNilpotent), PreconditionError);
  CHECK_NOTHROW(ricci(s, g, RicciMode::kGeneral));
}

TEST_CASE("Ricci is the trace of the Riemann tensor") {
  Rng rng(9);
  const LieAlgebra n = parse_structure(kAlgebraN);
  for (int i = 0; i < 5; ++i) {
    const PseudoMetric g(n.space(), random_gram(7, rng));
    CHECK(ricci_from_riemann(riemann(n, g), dual_metric(g)) == ricci(n, g));
  }
}

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

// Scalars, forms and the Hodge star.

#include "doctest.h"
#include "g2nil/errors.hpp"
#include "g2nil/form.hpp"
#include "g2nil/hodge.hpp"
#include "g2nil/polynomial.hpp"
#include "g2nil/scalar.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::testing;

TEST_CASE("rational parsing, printing and exact roots") {
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK_FALSE(Rational::try_parse("1/0x"));
  CHECK(*frac(-8, 27).exact_root(3) == frac(-2, 3));
  CHECK_FALSE(frac(2, 1).exact_root(9));
  CHECK_FALSE(frac(-4, 1).exact_root(2));
}

TEST_CASE("ninth roots: perfect powers collapse, cubes reduce, others extend") {
  CHECK(Scalar::ninth_root_of(frac(512, 1)).is_rational());
  CHECK(Scalar::ninth_root_of(frac(512, 1)) == Scalar(frac(2, 1)));
  CHECK(Scalar::ninth_root_of(frac(-1, 512)) == Scalar(frac(-1, 2)));

  // 8 = 2^3: the root is 2^(1/3), so its cube is rational.
  const Scalar c = Scalar::ninth_root_of(frac(8, 1));
  CHECK(c.is_ninth_root());
  CHECK(c * c * c == Scalar(frac(2, 1)));
  CHECK(c.to_double() == doctest::Approx(1.2599210498948732));

  const Scalar d = Scalar::ninth_root_of(frac(-3, 1));
  Scalar p(frac(1, 1));
  for (int i = 0; i < 9; ++i) p *= d;
  CHECK(p == Scalar(frac(-3, 1)));
  CHECK(d.sign() < 0);
  CHECK(d.to_double() == doctest::Approx(-1.1298309639097756));
}

TEST_CASE("ninth-root field axioms on random elements") {
  Rng rng(11);
  const Rational modulus = frac(-7, 5);
  auto random_element = [&] {
    NinthRoot::Coeffs c;
    for (auto& x : c) x = random_rational(rng, 4, 3);
    return Scalar(NinthRoot(modulus, c));
  };
  for (int i = 0; i < 200; ++i) {
    const Scalar x = random_element(), y = random_element(), z = random_element();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(frac(1, 1)));
  }
}

TEST_CASE("mixing different ninth-root rings is rejected") {
  const Scalar a = Scalar::ninth_root_of(frac(2, 1));
  const Scalar b = Scalar::ninth_root_of(frac(3, 1));
  CHECK_THROWS_AS((void)(a + b), RingMismatchError);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::variable("x"), y = Polynomial::variable("y");
  const Polynomial s = (x + y).pow(2);
  CHECK(s == x * x + Polynomial(frac(2, 1)) * x * y + y * y);
  CHECK(s.total_degree() == 2);
  CHECK((s - y * y).divide_exact(x) == x + Polynomial(frac(2, 1)) * y);
  CHECK(s.evaluate({{"x", frac(1, 2)}, {"y", frac(3, 2)}}) == frac(4, 1));
  CHECK((s - s).is_zero());
}

TEST_CASE("form literals round-trip and follow increasing-index signs") {
  const Coframe e(7);
  const KForm a = parse_form(e, "e21 + 3/2*e34 - e43");
  CHECK(a.degree() == 2);
  const KForm b = parse_form(e, a.str());
  CHECK(a == b);
  CHECK(parse_form(e, "e21") == -parse_form(e, "e12"));
  CHECK(parse_form(e, "e11").is_zero());
  CHECK_THROWS_AS(parse_form(e, "e12 + e123"), Error);
  CHECK_THROWS_AS(parse_form(e, "e18"), Error);
}

TEST_CASE("wedge and contraction on basis forms") {
  const Coframe e(7);
  const KForm e1 = parse_form(e, "e1"), e2 = parse_form(e, "e2"), e3 = parse_form(e, "e3");
  CHECK(wedge(e1, e2) == parse_form(e, "e12"));
  CHECK(wedge(e2, e1) == -parse_form(e, "e12"));
  CHECK(wedge(wedge(e1, e2), e3) == parse_form(e, "e123"));
  CHECK(contract_basis(1, parse_form(e, "e123")) == -parse_form(e, "e13"));
  CHECK(contract_basis(0, parse_form(e, "e23")).is_zero());
  CHECK(contract_basis(0, KForm::constant(e, Scalar(frac(5, 1)))).is_zero());
  CHECK(wedge(parse_form(e, "e1234"), parse_form(e, "e4567")).is_zero());
}

TEST_CASE("coframe changes are invertible") {
  Rng rng(5);
  const Coframe e(7), f(7, "f");
  for (int i = 0; i < 20; ++i) {
    const ScalarMatrix m = random_invertible(7, rng);
    const KForm a = random_form(e, 3, rng);
    const KForm b = change_coframe(a, m, f);
    CHECK(change_coframe(b, inverse(m), e) == a);
  }
}

TEST_CASE("Hodge star in Euclidean 3-space") {
  const Coframe e(3);
  const HodgeStar star(ScalarMatrix::identity(3), KForm::volume(e));
  CHECK(star(parse_form(e, "e1")) == parse_form(e, "e23"));
  CHECK(star(parse_form(e, "e2")) == -parse_form(e, "e13"));
  CHECK(star(parse_form(e, "e3")) == parse_form(e, "e12"));
  CHECK(star(KForm::constant(e, Scalar(frac(1, 1)))) == KForm::volume(e));
  CHECK(star(star(parse_form(e, "e12"))) == parse_form(e, "e12"));
}

TEST_CASE("Hodge star on a Lorentzian plane") {
  const Coframe e(2);
  const HodgeStar star(ScalarMatrix::diagonal({Scalar(frac(-1, 1)), Scalar(frac(1, 1))}), KForm::volume(e));
  // a ^ *a = <a, a> vol with <e1, e1> = -1.
  const KForm e1 = parse_form(e, "e1");
  CHECK(wedge(e1, star(e1)) == -KForm::volume(e));
  CHECK(star(star(e1)) == e1);
  CHECK(star(KForm::volume(e)) == -KForm::constant(e, Scalar(frac(1, 1))));
}

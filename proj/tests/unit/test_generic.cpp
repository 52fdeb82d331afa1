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

// Generic closed forms, polynomial b-matrices and identity certificates.

#include "doctest.h"
#include "g2nil/errors.hpp"
#include "g2nil/g2star.hpp"
#include "g2nil/generic.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::testing;

namespace {

Polynomial var(const char* s) { return Polynomial::variable(s); }

Polynomial as_poly(const Scalar& s) { return s.is_polynomial() ? s.as_polynomial() : Polynomial(*s.to_rational()); }

// Values of the family parameters read off a concrete member.
std::map<std::string, Rational> parameters_of(const ParametrizedForm& family, const KForm& phi) {
  std::map<std::string, Rational> v;
  for (const auto& name : family.params) {
    std::vector<int> idx;
    for (char ch : name.substr(1)) idx.push_back(ch - '1');
    v[name] = *phi.coefficient(mask_of(idx)).to_rational();
  }
  return v;
}

}  // namespace

TEST_CASE("closed 3-forms of g: 18 parameters named by their monomials") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const ParametrizedForm family = closed_form_space(g, 3);
  CHECK(family.dimension() == 18);
  CHECK(g.d(family.base).is_zero());
  CHECK(std::is_sorted(family.params.begin(), family.params.end()));
  CHECK(std::find(family.params.begin(), family.params.end(), "c137") != family.params.end());
}

TEST_CASE("closed 2-forms and 3-forms of n are closed") {
  const LieAlgebra n = parse_structure(kAlgebraN);
  for (int k : {1, 2, 3, 4}) CHECK(n.d(closed_form_space(n, k).base).is_zero());
}

TEST_CASE("specializing the generic b-matrix reproduces b_phi") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const ParametrizedForm family = closed_form_space(g, 3);
  const KForm phi = parse_form(g.space(), kPhiG);
  const auto values = parameters_of(family, phi);
  CHECK(specialize(family.base, values) == phi);
  const ScalarMatrix generic = polynomial_b_matrix(family);
  const ScalarMatrix concrete = b_form(phi);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      CHECK(Scalar(as_poly(generic(i, j)).evaluate(values)) == concrete(i, j));
}

TEST_CASE("randomized identity testing agrees with expansion") {
  const Polynomial x = var("x"), y = var("y"), z = var("z");
  const Polynomial zero = (x + y) * (x - y) - x * x + y * y;
  const Polynomial nonzero = (x + y + z).pow(3) - x * x * x;
  for (IdentityMethod m : {IdentityMethod::kExpand, IdentityMethod::kRandomized}) {
    IdentityOptions opt;
    opt.method = m;
    opt.seed = 99;
    CHECK(verify_identity(zero, opt).is_zero);
    CHECK_FALSE(verify_identity(nonzero, opt).is_zero);
  }
}

TEST_CASE("randomized determinants agree with expansion on small minors of b") {
  const ParametrizedForm family = closed_form_space(parse_structure(kAlgebraG), 3);
  const ScalarMatrix b = polynomial_b_matrix(family);
  IdentityOptions expand, randomized;
  randomized.method = IdentityMethod::kRandomized;
  randomized.seed = 7;
  int checked = 0;
  for (std::size_t r0 = 3; r0 < 7; ++r0)
    for (std::size_t c0 = 3; c0 < 7; ++c0) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < 3; ++k) rows.push_back((r0 + k) % 7), cols.push_back((c0 + k) % 7);
      const ScalarMatrix m = b.minor_matrix(rows, cols);
      const IdentityResult e = verify_determinant(m, expand);
      const IdentityResult r = verify_determinant(m, randomized);
      CHECK(e.is_zero == r.is_zero);
      ++checked;
    }
  CHECK(checked == 16);
}

TEST_CASE("randomized certificates record their seed and bound") {
  const ParametrizedForm family = closed_form_space(parse_structure(kAlgebraG), 3);
  IdentityOptions opt;
  opt.method = IdentityMethod::kRandomized;
  opt.seed = 2026;
  const ScalarMatrix b = polynomial_b_matrix(family);
  const IdentityResult r = verify_identity(as_poly(b(4, 5)) + Polynomial(frac(2, 1)) * as_poly(b(3, 6)), opt);
  CHECK(r.is_zero);
  CHECK(r.certificate.method == "randomized");
  CHECK(r.certificate.seed == 2026);
  CHECK(r.certificate.evaluations >= 64);
  CHECK(r.certificate.failure_log2 < -64.0);
}

TEST_CASE("lemma suite on g") {
  const LemmaReport r = lemma_suite(paper_algebra_g());
  CHECK(r.paper_algebra);
  CHECK(r.closed_dimension == 18);
  CHECK(r.all_applicable_hold());
  for (const auto& c : r.checks) CHECK_MESSAGE(c.holds, c.id);
}

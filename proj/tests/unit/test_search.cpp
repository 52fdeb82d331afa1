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

// Numeric Einstein search: residuals, reconstruction and certification.

#include <cmath>

#include "doctest.h"
#include "g2nil/errors.hpp"
#include "g2nil/metric.hpp"
#include "g2nil/search.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::testing;

namespace {

// Frame coefficients m(i, j), i > j, in the row-major order of parametrize.
std::vector<Rational> frame_coefficients(const ScalarMatrix& m) {
  std::vector<Rational> p;
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) p.push_back(*m(i, j).to_rational());
  return p;
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(r.to_double());
  return out;
}

std::vector<Rational> einstein_diag_rationals() {
  std::vector<Rational> d;
  for (const auto& s : einstein_diagonal()) d.push_back(*s.to_rational());
  return d;
}

}  // namespace

TEST_CASE("continued-fraction reconstruction") {
  CHECK(*reconstruct_rational("0.33333333333333333333333333333333", 64, 80, 256) == frac(1, 3));
  CHECK(*reconstruct_rational("-2.7142857142857142857142857142857", 64, 80, 256) == frac(-19, 7));
  CHECK(*reconstruct_rational("5", 64, 80, 256) == frac(5, 1));
  // pi has no small-denominator convergent within 2^-80.
  CHECK_FALSE(reconstruct_rational("3.14159265358979323846264338327950288", 16, 80, 256));
}

TEST_CASE("the exact Einstein solution has a tiny float residual") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const auto p = to_doubles(frame_coefficients(einstein_frame()));
  const auto d = to_doubles(einstein_diag_rationals());
  double worst = 0;
  for (double r : residual_system(g, p, d)) worst = std::max(worst, std::abs(r));
  CHECK(worst < 1e-10);
}

TEST_CASE("numeric Ricci matches the exact Ricci tensor") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  Rng rng(41);
  for (int c = 0; c < 10; ++c) {
    std::vector<Rational> p(21), d(7);
    for (auto& x : p) x = random_rational(rng, 3, 2);
    for (auto& x : d) x = random_unit(rng, 3, 2);
    const LieAlgebra f = change_of_basis(g, frame_matrix(7, p), "f");
    std::vector<Scalar> ds(d.begin(), d.end());
    const ScalarMatrix exact = ricci(f, PseudoMetric::diagonal(f.space(), ds));
    const auto numeric = numeric_ricci(g, to_doubles(p), to_doubles(d));
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        const double x = exact(i, j).to_double();
        CHECK(numeric[i][j] == doctest::Approx(x).epsilon(1e-9).scale(1.0));
      }
  }
}

TEST_CASE("configuration validation") {
  SearchConfig cfg;
  cfg.algebra = parse_structure(kAlgebraG);
  cfg.sign_pattern = {1, -1, -1};
  cfg.seeds = {0};
  CHECK_THROWS_AS(validate(cfg), Error);
  cfg.sign_pattern = {1, -1, -1, 1, -1, -1, 1};
  cfg.newton.residual_tol = -1;
  CHECK_THROWS_AS(validate(cfg), Error);
}

TEST_CASE("search near the exact solution certifies the Einstein constant, deterministically") {
  SearchConfig cfg;
  cfg.algebra = parse_structure(kAlgebraG);
  cfg.sign_pattern = {1, -1, -1, 1, -1, -1, 1};
  cfg.seeds = {1, 2};
  std::vector<double> center = to_doubles(frame_coefficients(einstein_frame()));
  for (double x : to_doubles(einstein_diag_rationals())) center.push_back(x);
  cfg.center = center;
  cfg.radius = 1e-3;
  cfg.threads = 2;
  const auto first = solve(cfg);
  cfg.threads = 1;
  const auto second = solve(cfg);
  REQUIRE(first.size() == 2);
  for (std::size_t i = 0; i < first.size(); ++i) {
    const Candidate& c = first[i];
    CHECK(c.status == CandidateStatus::kEinsteinCertified);
    REQUIRE(c.lambda);
    CHECK(*c.lambda == einstein_lambda());
    // Certified candidates pass the exact check independently.
    const LieAlgebra f = change_of_basis(cfg.algebra, frame_matrix(7, c.p_exact), "f");
    std::vector<Scalar> ds(c.diag_exact.begin(), c.diag_exact.end());
    const EinsteinResult e = einstein_check(f, PseudoMetric::diagonal(f.space(), ds));
    CHECK(e.einstein);
    CHECK(c.obstruction_inequality == std::optional<bool>(false));
    // Identical configuration, identical output.
    CHECK(c.p == second[i].p);
    CHECK(c.diag == second[i].diag);
    CHECK(c.status == second[i].status);
    CHECK(c.p_exact == second[i].p_exact);
  }
}

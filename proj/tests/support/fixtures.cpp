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

#include "support/fixtures.hpp"

#include <string>

#include "g2nil/hodge.hpp"

namespace g2nil::testing {

namespace {

ScalarMatrix frame_from(const char* symbol, const std::vector<std::string>& rows) {
  const Coframe target(7, symbol);
  ScalarMatrix m(7, 7);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const KForm f = parse_form(target, rows[i], 1);
    for (const auto& [mask, c] : f.terms()) m(i, static_cast<std::size_t>(mask_indices(mask)[0])) = c;
  }
  return m;
}

}  // namespace

ScalarMatrix einstein_frame() {
  return frame_from("f", {"f1", "f2", "-26/51*f2+f3", "-2300/2601*f2-26/51*f3+f4", "-2300/2601*f3+46/51*f4+f5",
                          "-2300/2601*f4+f6", "-50/51*f6+f7"});
}

std::vector<Scalar> einstein_diagonal() {
  std::vector<Scalar> d;
  for (const char* s : {"71639296000000000/168377826559400929", "-1946720000000/2015993900449",
                        "-2116000000/6975757441", "21160000/24137569", "-115000/250563", "-600/289", "1"})
    d.emplace_back(Rational::parse(s));
  return d;
}

Rational einstein_lambda() { return Rational::parse("48661191875666868481/659081523200000000000"); }

ScalarMatrix h_frame() {
  return frame_from("h", {"-1/2*h2+1/2*h6", "-h4+h7", "h3", "-1/2*h1+h3-h4+1/2*h5+h7", "h1+1/2*h3+h5",
                          "h2-2*h4+h6+2*h7", "2*h2-3/2*h4+5/2*h7"});
}

Rational random_rational(Rng& rng, int num, int den) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return frac(n(rng), d(rng));
}

Rational random_unit(Rng& rng, int num, int den) {
  for (;;) {
    const Rational r = random_rational(rng, num, den);
    if (!r.is_zero()) return r;
  }
}

KForm random_form(const Coframe& space, int degree, Rng& rng, double density) {
  std::bernoulli_distribution keep(density);
  KForm f(space, degree);
  for (Mask m : monomials(space.dim, degree))
    if (keep(rng)) f.add_term(m, Scalar(random_rational(rng)));
  return f;
}

Vector random_vector(const Coframe& space, Rng& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i < space.dim; ++i) c.emplace_back(random_rational(rng));
  return Vector(space, c);
}

ScalarMatrix random_invertible(int n, Rng& rng) {
  std::uniform_int_distribution<long> e(-2, 2);
  const auto un = static_cast<std::size_t>(n);
  for (;;) {
    ScalarMatrix a(un, un);
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) a(i, j) = Scalar(frac(e(rng), 1));
    if (!bareiss_determinant(a).is_zero()) return a;
  }
}

RandomMetric random_metric(int n, int negatives, Rng& rng) {
  const ScalarMatrix a = random_invertible(n, rng);
  std::vector<Scalar> d;
  Scalar vol = bareiss_determinant(a);
  if (vol.sign() < 0) vol = -vol;
  for (int i = 0; i < n; ++i) {
    const Rational q = random_unit(rng, 3, 3);
    d.emplace_back(i < negatives ? -(q * q) : q * q);
    vol *= Scalar(q.abs());
  }
  return {a.transposed() * ScalarMatrix::diagonal(d) * a, vol};
}

ScalarMatrix random_gram(int n, Rng& rng) {
  std::uniform_int_distribution<int> neg(0, n);
  return random_metric(n, neg(rng), rng).gram;
}

KForm random_adapted_phi(const Coframe& space, Rng& rng) {
  return change_coframe(standard_phi(Coframe(7, "v")), random_invertible(7, rng), space);
}

}  // namespace g2nil::testing

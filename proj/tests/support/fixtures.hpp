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

// Shared fixtures for the test binaries: the reference algebras and forms,
// and seeded generators of random exact data.

#ifndef G2NIL_TESTS_FIXTURES_HPP
#define G2NIL_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "g2nil/form.hpp"
#include "g2nil/g2star.hpp"
#include "g2nil/lie_algebra.hpp"
#include "g2nil/metric.hpp"

namespace g2nil::testing {

inline constexpr const char* kAlgebraG = "0,0,12,13,14,15+23,16+23+24";
inline constexpr const char* kAlgebraN = "0,0,12,0,0,13+24,15";
inline constexpr const char* kAlgebraNice = "0,0,12,13,14,15,16+23";
inline constexpr const char* kPhiG = "e137+2*e156-2*e157+e235-e237+e246+e345";
inline constexpr const char* kPsiN = "e123+1/2*e257+e167+e347-e456";

/// Einstein data on g: f-coframe (e^i in terms of f^j) and diagonal Gram.
ScalarMatrix einstein_frame();
std::vector<Scalar> einstein_diagonal();
Rational einstein_lambda();

/// Orthonormal h-frame of g_phi on g (e^i in terms of h^j).
ScalarMatrix h_frame();

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int num = 5, int den = 4);
/// Nonzero rational.
Rational random_unit(Rng& rng, int num = 5, int den = 4);
KForm random_form(const Coframe& space, int degree, Rng& rng, double density = 0.5);
Vector random_vector(const Coframe& space, Rng& rng);
/// Invertible integer matrix with entries in [-2, 2].
ScalarMatrix random_invertible(int n, Rng& rng);
/// A^T diag(s_i q_i^2) A: nondegenerate with `negatives` negative squares
/// and a rational volume coefficient |det A| prod |q_i|.
struct RandomMetric {
  ScalarMatrix gram;
  Scalar volume;
};
RandomMetric random_metric(int n, int negatives, Rng& rng);
/// Random symmetric nondegenerate Gram matrix of arbitrary signature.
ScalarMatrix random_gram(int n, Rng& rng);
/// The adapted 3-form pulled back by a random invertible coframe change.
KForm random_adapted_phi(const Coframe& space, Rng& rng);

}  // namespace g2nil::testing

#endif  // G2NIL_TESTS_FIXTURES_HPP

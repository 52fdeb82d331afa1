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

// Randomized exact property suites. Each runs `cases` seeded instances and
// reports the number of violations together with the first one.

#ifndef G2NIL_TESTS_PROPERTIES_HPP
#define G2NIL_TESTS_PROPERTIES_HPP

#include <cstdint>
#include <string>

namespace g2nil::testing {

struct PropertyOutcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

/// d(d a) = 0 for random forms on the reference algebras.
PropertyOutcome property_d_squared(std::uint64_t seed, int cases);
/// ** = id and <a, a> vol = a ^ *a for signature (3,4) metrics, including
/// metrics induced by random adapted 3-forms.
PropertyOutcome property_star_star(std::uint64_t seed, int cases);
/// Graded anticommutativity, associativity and the contraction
/// antiderivation rule.
PropertyOutcome property_wedge_contraction(std::uint64_t seed, int cases);
/// Riemann symmetries, first Bianchi identity, torsion-freeness and metric
/// compatibility for random metrics on g and n.
PropertyOutcome property_curvature(std::uint64_t seed, int cases);
/// ricci(general) = ricci(nilpotent) for random metrics on g and n.
PropertyOutcome property_ricci_modes(std::uint64_t seed, int cases);

}  // namespace g2nil::testing

#endif  // G2NIL_TESTS_PROPERTIES_HPP

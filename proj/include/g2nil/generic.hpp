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

#ifndef G2NIL_GENERIC_HPP
#define G2NIL_GENERIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "g2nil/form.hpp"
#include "g2nil/lie_algebra.hpp"
#include "g2nil/matrix.hpp"

namespace g2nil {

/// A k-form whose coefficients are linear in free parameters c_{ijk}.
struct ParametrizedForm {
  KForm base;                       // Polynomial coefficients
  std::vector<std::string> params;  // in lexicographic monomial order
  int dimension() const { return static_cast<int>(params.size()); }
};

/// Generic solution of d(gamma) = 0 on k-forms. Monomials are ordered
/// lexicographically by index tuple and eliminated last-first, so the
/// free parameters are the lex-earliest monomials; each is named "c"
/// followed by its indices (e.g. c137).
ParametrizedForm closed_form_space(const LieAlgebra& lie, int degree);

/// b-matrix of the family (entries are polynomials in the parameters).
ScalarMatrix polynomial_b_matrix(const ParametrizedForm& p);

/// Substitutes concrete values for the parameters of a family member.
KForm specialize(const KForm& f, const std::map<std::string, Rational>& values);

enum class IdentityMethod { kExpand, kRandomized };
std::string to_string(IdentityMethod m);

struct IdentityCertificate {
  std::string method;            // "expand", "bareiss" or "randomized"
  std::uint64_t seed = 0;        // randomized only
  int evaluations = 0;           // randomized only
  unsigned degree_bound = 0;     // total degree bound of the identity
  std::string sample_space;      // e.g. "integers in [0, 2^64)"
  double failure_log2 = 0.0;     // log2 of the false-zero probability bound
  std::string note;              // budget fallbacks, witnesses, ...
};

struct IdentityResult {
  bool is_zero = false;
  IdentityCertificate certificate;
};

struct IdentityOptions {
  IdentityMethod method = IdentityMethod::kExpand;
  std::uint64_t seed = 0x5eed'2026ULL;
  /// Term budget for fraction-free elimination before switching to the
  /// randomized test.
  std::size_t term_budget = 20'000;
  int min_evaluations = 64;
  int threads = 0;  // 0: hardware concurrency
};

/// Zero test of a polynomial expression.
IdentityResult verify_identity(const Polynomial& expr, const IdentityOptions& opt = {});
/// Zero test of det(m) for a square matrix of polynomials.
IdentityResult verify_determinant(const ScalarMatrix& m, const IdentityOptions& opt = {});

/// Fraction-free determinant that gives up once an intermediate entry has
/// more than `term_budget` terms.
std::optional<Polynomial> bareiss_with_budget(const ScalarMatrix& m, std::size_t term_budget);

struct LemmaCheck {
  std::string id;
  std::string description;
  bool applicable = true;  // false: statement is specific to the reference algebra g
  bool holds = false;
  IdentityCertificate certificate;
};

struct LemmaReport {
  bool paper_algebra = false;  // input equals (0,0,12,13,14,15+23,16+23+24)
  int closed_dimension = 0;
  ParametrizedForm family;
  ScalarMatrix b;
  bool b_identically_zero = false;
  std::vector<LemmaCheck> checks;
  bool all_applicable_hold() const;
};

LemmaReport lemma_suite(const LieAlgebra& lie, const IdentityOptions& opt = {});

/// The algebra (0,0,12,13,14,15+23,16+23+24).
LieAlgebra paper_algebra_g();

}  // namespace g2nil

#endif  // G2NIL_GENERIC_HPP

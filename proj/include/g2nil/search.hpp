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

#ifndef G2NIL_SEARCH_HPP
#define G2NIL_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2nil/lie_algebra.hpp"
#include "g2nil/metric.hpp"

namespace g2nil {

// Numeric hunt for diagonal Einstein metrics in a triangular frame.
//
// The unknown frame change is e^i = f^i + sum_{j<i} p_ij f^j (so the frame
// vectors are f_j = e_j + sum_{i>j} p_ij e_i) and the metric is diagonal
// in f: g(f_k, f_k) = diag_k. For n = 7 that is 21 + 7 = 28 unknowns.

/// Index pairs (i, j), i > j, 0-based, in the order used for p vectors:
/// (1,0), (2,0), (2,1), (3,0), ...
struct Parametrization {
  int n = 0;
  std::vector<std::pair<int, int>> p_index;
  int p_count() const { return static_cast<int>(p_index.size()); }
  int unknowns() const { return p_count() + n; }
  /// "p21" style names (1-based).
  std::vector<std::string> p_names() const;
  /// Human-readable frame, one "f1 = e1 + p21*e2 + ..." line per vector.
  std::vector<std::string> frame_expressions() const;
};

Parametrization parametrize(const LieAlgebra& lie);

/// The coframe matrix m(i, j) of e^i = sum_j m(i, j) f^j for exact p.
ScalarMatrix frame_matrix(int n, const std::vector<Rational>& p);

/// Off-diagonal Ricci entries Ric(f_j, f_l), j < l (n(n-1)/2 values),
/// followed by Ric_kk diag_{k+1} - Ric_{k+1,k+1} diag_k, k = 1..n-1.
std::vector<double> residual_system(const LieAlgebra& lie, const std::vector<double>& p,
                                    const std::vector<double>& diag);

/// Ricci matrix in the f-frame, evaluated in double precision.
std::vector<std::vector<double>> numeric_ricci(const LieAlgebra& lie, const std::vector<double>& p,
                                               const std::vector<double>& diag);

enum class CandidateStatus { kDegenerate, kNonEinstein, kEinsteinNumeric, kEinsteinCertified };
std::string to_string(CandidateStatus s);

struct Candidate {
  std::uint64_t seed = 0;
  std::vector<double> p;
  std::vector<double> diag;
  double residual = 0.0;
  int iterations = 0;
  CandidateStatus status = CandidateStatus::kNonEinstein;
  /// High-precision refinement of (p, diag) as decimal strings; empty when
  /// the candidate was not polished.
  std::vector<std::string> refined;
  /// Frame coefficients pinned to 0 during refinement to remove the
  /// directions along which the equations are degenerate.
  std::vector<std::string> gauge_fixed;
  // Exact data, set for EinsteinCertified.
  std::vector<Rational> p_exact;
  std::vector<Rational> diag_exact;
  std::optional<Rational> lambda;
  /// Obstruction inequality on the certified metric (dim m + dim n >=
  /// dim derived - dim center).
  std::optional<bool> obstruction_inequality;
  std::string note;
};

struct NewtonOptions {
  int max_iter = 400;
  double damping = 1e-3;       // initial Levenberg-Marquardt parameter
  double residual_tol = 1e-10;
};

struct ReconstructionOptions {
  int max_denominator_bits = 96;
  int precision_bits = 512;  // working precision of the refinement
};

struct SearchConfig {
  LieAlgebra algebra;
  std::vector<int> sign_pattern;  // +1 / -1 per diagonal entry
  std::vector<std::uint64_t> seeds;
  NewtonOptions newton;
  ReconstructionOptions reconstruction;
  double degeneracy_tol = 1e-8;
  /// Start near this point (p then diag) instead of uniformly at random;
  /// each coordinate is perturbed by a relative amount up to `radius`.
  std::optional<std::vector<double>> center;
  double radius = 1e-3;
  bool certify = true;
  int threads = 0;  // 0: hardware concurrency
};

/// Throws PreconditionError on an invalid config.
void validate(const SearchConfig& config);

/// Multi-start Levenberg-Marquardt; one candidate per seed, in seed order.
/// Converged, non-degenerate candidates are refined and, if requested,
/// certified.
std::vector<Candidate> solve(const SearchConfig& config);

/// Rational reconstruction (continued fractions) of the candidate's values
/// followed by an exact Einstein check of the reconstructed metric. Uses
/// the refined values when present, otherwise the doubles.
Candidate certify(const LieAlgebra& lie, Candidate candidate, const ReconstructionOptions& opt = {});

/// Refines a numeric candidate at the given binary precision and fills
/// `refined`. Directions along which the Jacobian is degenerate are removed
/// first by pinning the smallest frame coefficients to 0 (recorded in
/// `gauge_fixed`); the rest is solved by Gauss-Newton. Returns false if
/// the iteration did not converge.
bool refine(const LieAlgebra& lie, Candidate& candidate, int precision_bits);

/// Best rational approximation of the decimal `value` by continued
/// fractions: the first convergent within 2^-tol_bits, with denominator
/// below 2^max_den_bits.
std::optional<Rational> reconstruct_rational(const std::string& value, int max_den_bits, int tol_bits,
                                             int precision_bits);

}  // namespace g2nil

#endif  // G2NIL_SEARCH_HPP

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

#ifndef G2NIL_G2STAR_HPP
#define G2NIL_G2STAR_HPP

#include <string>

#include "g2nil/form.hpp"
#include "g2nil/hodge.hpp"
#include "g2nil/lie_algebra.hpp"
#include "g2nil/metric.hpp"

namespace g2nil {

enum class OrbitClass { kPositiveDefinite, kIndefinite, kDegenerate };
std::string to_string(OrbitClass c);

/// b_ij = 1/6 * top coefficient of i_{e_i}phi ^ i_{e_j}phi ^ phi, relative
/// to the reference volume e^{1..7}. Works over any scalar ring.
ScalarMatrix b_form(const KForm& phi);

/// Top coefficient of a ^ b for complementary degrees, without building
/// the product.
Scalar top_pairing(const KForm& a, const KForm& b);

OrbitClass stability_class(const KForm& phi);

/// The adapted 3-form -v127 - v347 + v567 + v135 - v146 - v236 - v245.
KForm standard_phi(const Coframe& space);
/// Its Hodge dual for the metric diag(-1,-1,-1,-1,1,1,1) and volume v^{1..7}.
KForm standard_star_phi(const Coframe& space);

/// A stable 3-form with its induced metric g = b / delta, delta^9 = det b,
/// volume delta * e^{1..7} and Hodge star.
class G2StarStructure {
 public:
  /// Throws InstabilityError when det b = 0.
  explicit G2StarStructure(KForm phi);

  const KForm& phi() const noexcept { return phi_; }
  const ScalarMatrix& bmatrix() const noexcept { return b_; }
  const Scalar& det_b() const noexcept { return det_; }
  const Scalar& delta() const noexcept { return delta_; }
  const KForm& vol() const noexcept { return vol_; }
  const PseudoMetric& metric() const noexcept { return metric_; }
  OrbitClass orbit_class() const noexcept { return class_; }
  const HodgeStar& hodge() const noexcept { return star_; }
  const Coframe& space() const noexcept { return phi_.space(); }

  KForm star(const KForm& a) const { return star_(a); }
  const KForm& star_phi() const noexcept { return star_phi_; }
  Scalar inner(const KForm& a, const KForm& b) const { return star_.inner(a, b); }

 private:
  KForm phi_;
  ScalarMatrix b_;
  Scalar det_;
  Scalar delta_;
  KForm vol_;
  PseudoMetric metric_;
  OrbitClass class_ = OrbitClass::kDegenerate;
  HodgeStar star_;
  KForm star_phi_;
};

inline G2StarStructure induce(const KForm& phi) { return G2StarStructure(phi); }

struct Decomposition2 {
  KForm alpha;    // omega7 = *(alpha ^ *phi)
  KForm omega7;
  KForm omega14;  // omega14 ^ *phi = 0
};
Decomposition2 decompose2(const G2StarStructure& s, const KForm& beta);

struct Decomposition3 {
  Scalar f;     // component f phi
  KForm alpha;  // component *(alpha ^ phi)
  KForm g27;    // g27 ^ phi = 0 = g27 ^ *phi
};
Decomposition3 decompose3(const G2StarStructure& s, const KForm& gamma);

/// d phi = tau0 *phi + 3 tau1 ^ phi + *tau3,  d*phi = 4 tau1 ^ *phi - *tau2.
struct TorsionForms {
  Scalar tau0;
  KForm tau1, tau2, tau3;
};
TorsionForms torsion_forms(const LieAlgebra& lie, const G2StarStructure& s);

/// For closed phi: tau = -*d*phi; checks tau in Omega^2_14 and tau ^ phi = d*phi.
/// Throws PreconditionError when d phi != 0.
KForm torsion_closed(const LieAlgebra& lie, const G2StarStructure& s);

/// delta a = (-1)^{n(k+1)+1} * d * a.
KForm codifferential(const LieAlgebra& lie, const G2StarStructure& s, const KForm& a);
/// (d delta + delta d) a.
KForm laplacian(const LieAlgebra& lie, const G2StarStructure& s, const KForm& a);

struct HarmonicReport {
  bool closed = false;
  bool coclosed = false;
  KForm d_phi;
  KForm d_star_phi;
  KForm delta_phi;
  KForm laplacian_phi;
  bool harmonic = false;
};
HarmonicReport harmonic_report(const LieAlgebra& lie, const G2StarStructure& s);

/// -1/2 g(tau, tau) for closed phi.
Scalar scal_from_torsion(const LieAlgebra& lie, const G2StarStructure& s);

}  // namespace g2nil

#endif  // G2NIL_G2STAR_HPP

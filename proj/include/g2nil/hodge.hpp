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

#ifndef G2NIL_HODGE_HPP
#define G2NIL_HODGE_HPP

#include <memory>

#include "g2nil/form.hpp"
#include "g2nil/matrix.hpp"

namespace g2nil {

/// <e^I, e^J> = det(G[I, J]) for the Gram matrix G of a bilinear form on
/// the coframe (i.e. the dual metric).
Scalar monomial_inner(const ScalarMatrix& coframe_gram, Mask i, Mask j);

/// Bilinear extension of `coframe_gram` to k-forms via Gram determinants.
Scalar form_inner(const ScalarMatrix& coframe_gram, const KForm& a, const KForm& b);

/// Hodge star of a nondegenerate metric with a chosen volume form:
/// b ^ *a = <b, a> vol for every k-form b.
///
/// Inner-product tables are built lazily per degree; the object is cheap
/// to copy (tables are shared) and safe to use from several threads.
class HodgeStar {
 public:
  HodgeStar() = default;
  /// `frame_gram` is the metric on the frame (vectors); it is inverted
  /// here. Throws SingularMetricError when it is degenerate.
  HodgeStar(const ScalarMatrix& frame_gram, KForm vol);

  /// Same, from an already inverted (coframe) Gram matrix.
  static HodgeStar from_coframe_gram(const ScalarMatrix& coframe_gram, KForm vol);

  const ScalarMatrix& coframe_gram() const noexcept { return dual_; }
  const KForm& volume() const noexcept { return vol_; }

  KForm operator()(const KForm& a) const;
  Scalar inner(const KForm& a, const KForm& b) const;

 private:
  struct Tables;
  const std::vector<std::vector<Scalar>>& table(int k) const;

  ScalarMatrix dual_;
  KForm vol_;
  std::shared_ptr<Tables> tables_;
};

/// All increasing monomials of degree k in n variables, in Mask order.
std::vector<Mask> monomials(int n, int k);

}  // namespace g2nil

#endif  // G2NIL_HODGE_HPP

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

// Report records shared by the command-line front end and the reproduction
// harness, plus helpers that turn textual inputs into library objects.

#ifndef G2NIL_TOOLS_REPORTS_HPP
#define G2NIL_TOOLS_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "g2nil/g2star.hpp"
#include "g2nil/lie_algebra.hpp"
#include "g2nil/metric.hpp"

namespace g2nil::cli {

/// A change of coframe given as 1-form literals. With `old_in_new`, entry i
/// expresses e^i in the new coframe; otherwise it expresses new^i in e.
struct FrameSpec {
  std::string symbol = "f";
  bool old_in_new = true;
  std::vector<std::string> forms;
};

/// Parses "f: e1-expr; e2-expr; ..." (old in new) or
/// "x<-: x1-expr; ..." (new in old). The symbol is the text before ':'.
FrameSpec parse_frame_spec(const std::string& text);

/// Matrix m with old^i = sum_j m(i, j) new^j.
ScalarMatrix frame_matrix(const Coframe& old_space, const FrameSpec& spec);

/// Reads a structure-equation literal, or a file holding one ('#' starts a
/// comment; line breaks are ignored).
LieAlgebra load_algebra(const std::string& literal_or_path);

/// "a,b,c" -> scalars.
std::vector<Scalar> parse_scalar_list(const std::string& text);
/// "r11,r12;r21,r22" -> matrix.
ScalarMatrix parse_matrix(const std::string& text);

struct MetricReport {
  std::string mode;  // "general" or "nilpotent"
  ScalarMatrix gram;
  std::optional<Signature> signature;
  ScalarMatrix ricci;
  bool einstein = false;
  std::optional<Scalar> lambda;
  Scalar scal;
  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

MetricReport metric_report(const LieAlgebra& lie, const PseudoMetric& g, RicciMode mode);

struct G2Report {
  bool stable = false;
  std::string orbit_class;
  ScalarMatrix gram;
  Scalar vol_coefficient;
  bool closed = false;
  bool coclosed = false;
  bool harmonic = false;
  TorsionForms torsion;
  Scalar scal;
  std::optional<Scalar> scal_from_torsion;  // closed structures only
};

bool operator==(const G2Report& a, const G2Report& b);

/// Throws InstabilityError when phi is not stable.
G2Report g2_report(const LieAlgebra& lie, const KForm& phi);

std::string to_string(RicciMode m);
RicciMode ricci_mode_from_string(const std::string& s);

}  // namespace g2nil::cli

#endif  // G2NIL_TOOLS_REPORTS_HPP

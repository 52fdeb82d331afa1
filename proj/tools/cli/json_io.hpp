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

// JSON encoding of exact values. Rationals are strings "p/q" (never
// floats); ninth-root scalars are {"coeffs": [9 rationals], "modulus": D};
// polynomials are {"poly": [[{var: exp}, coeff], ...]}.

#ifndef G2NIL_TOOLS_JSON_IO_HPP
#define G2NIL_TOOLS_JSON_IO_HPP

#include <json.hpp>

#include "g2nil/g2star.hpp"
#include "g2nil/generic.hpp"
#include "g2nil/lie_algebra.hpp"
#include "g2nil/metric.hpp"
#include "g2nil/search.hpp"
#include "cli/reports.hpp"

namespace g2nil::cli {

using json = nlohmann::ordered_json;

/// One entry of the reproduction checklist and, once run, its outcome.
struct ReproCheck {
  std::string id;
  std::string description;
  std::string kind;  // evaluator name
  json params;
  json expected;
  json observed;
  std::string verdict;  // "pass", "fail" or "" before running
  double runtime_ms = 0.0;
  friend bool operator==(const ReproCheck&, const ReproCheck&) = default;
};

json to_json(const Rational& r);
json to_json(const Polynomial& p);
json to_json(const Scalar& s);
json to_json(const KForm& f);
json to_json(const ScalarMatrix& m);
json to_json(const Signature& s);
json to_json(const StructureReport& r);
json to_json(const LieAlgebra& lie);  // {dim, labels, differentials}
json to_json(const ObstructionReport& r);
json to_json(const TorsionForms& t);
json to_json(const MetricReport& r);
json to_json(const G2Report& r);
json to_json(const IdentityCertificate& c);
json to_json(const LemmaReport& r);
json to_json(const Candidate& c);
json to_json(const ReproCheck& c);

Rational rational_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
Scalar scalar_from_json(const json& j);
KForm kform_from_json(const json& j);
ScalarMatrix matrix_from_json(const json& j);
IdentityCertificate certificate_from_json(const json& j);
Candidate candidate_from_json(const json& j);
LieAlgebra algebra_from_json(const json& j);
ObstructionReport obstruction_from_json(const json& j);
TorsionForms torsion_from_json(const json& j);
MetricReport metric_report_from_json(const json& j);
G2Report g2_report_from_json(const json& j);
LemmaReport lemma_report_from_json(const json& j);
ReproCheck repro_check_from_json(const json& j);

}  // namespace g2nil::cli

#endif  // G2NIL_TOOLS_JSON_IO_HPP

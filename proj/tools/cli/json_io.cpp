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

#include "cli/json_io.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "g2nil/errors.hpp"

namespace g2nil::cli {

namespace {

std::string monomial_label(Mask m) {
  std::string s;
  for (int i : mask_indices(m)) s += std::to_string(i + 1);
  return s;
}

Mask monomial_from_label(const std::string& s) {
  std::vector<int> idx;
  for (char ch : s) {
    if (ch < '1' || ch > '9') throw ParseError("bad monomial label: " + s, 0);
    idx.push_back(ch - '1');
  }
  return mask_of(idx);
}

json dims(const std::vector<int>& v) {
  json a = json::array();
  for (int x : v) a.push_back(x);
  return a;
}

// Doubles are emitted as numbers (shortest round-trip form); non-finite
// values, which JSON cannot hold, as the strings "nan", "inf", "-inf".
json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw ParseError("bad number " + s, 0);
}

json numbers(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

std::vector<double> numbers_from_json(const json& j) {
  std::vector<double> v;
  for (const auto& x : j) v.push_back(number_from_json(x));
  return v;
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

json to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    json mono = json::object();
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      if (t.exps[i] != 0) mono[p.vars()[i]] = t.exps[i];
    terms.push_back(json::array({mono, t.coeff.str()}));
  }
  return json{{"poly", terms}, {"text", p.str()}};
}

json to_json(const Scalar& s) {
  if (s.is_ninth_root()) {
    const auto& x = s.as_ninth_root();
    json c = json::array();
    for (const auto& r : x.coeffs()) c.push_back(r.str());
    return json{{"coeffs", c}, {"modulus", x.modulus().str()}};
  }
  if (s.is_polynomial()) return to_json(s.as_polynomial());
  return to_json(s.as_rational());
}

json to_json(const KForm& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back(json::array({monomial_label(m), to_json(c)}));
  return json{{"dim", f.space().dim}, {"symbol", f.space().symbol}, {"degree", f.degree()},
              {"terms", terms}, {"text", f.str()}};
}

json to_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Signature& s) {
  return json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

json to_json(const StructureReport& r) {
  return json{{"center_dim", r.center.dim()},
              {"derived_dim", r.derived.dim()},
              {"lower_central_dims", dims(r.lower_central_dims)},
              {"nilpotent", r.nilpotent},
              {"step", r.step},
              {"unimodular", r.unimodular},
              {"killing_zero", r.killing_zero}};
}

json to_json(const LieAlgebra& lie) {
  json labels = json::array(), diffs = json::array();
  for (int i = 0; i < lie.dim(); ++i) labels.push_back(lie.space().label(i));
  for (const auto& d : lie.differentials()) diffs.push_back(d.str());
  return json{{"dim", lie.dim()}, {"labels", labels}, {"differentials", diffs}};
}

json to_json(const ObstructionReport& r) {
  return json{{"dim_m", r.dim_m},
              {"dim_n", r.dim_n},
              {"dim_derived", r.dim_derived},
              {"dim_center", r.dim_center},
              {"inequality_holds", r.inequality_holds}};
}

json to_json(const TorsionForms& t) {
  return json{{"tau0", to_json(t.tau0)}, {"tau1", to_json(t.tau1)}, {"tau2", to_json(t.tau2)}, {"tau3", to_json(t.tau3)}};
}

json to_json(const MetricReport& r) {
  json j{{"mode", r.mode}, {"gram", to_json(r.gram)}};
  j["signature"] = r.signature ? to_json(*r.signature) : json(nullptr);
  j["ricci"] = to_json(r.ricci);
  j["einstein"] = r.einstein;
  if (r.lambda) j["lambda"] = to_json(*r.lambda);
  j["scal"] = to_json(r.scal);
  return j;
}

json to_json(const G2Report& r) {
  json j{{"stable", r.stable},
         {"class", r.orbit_class},
         {"gram", to_json(r.gram)},
         {"vol_coefficient", to_json(r.vol_coefficient)},
         {"closed", r.closed},
         {"coclosed", r.coclosed},
         {"harmonic", r.harmonic},
         {"torsion", to_json(r.torsion)},
         {"scal", to_json(r.scal)}};
  if (r.scal_from_torsion) j["scal_from_torsion"] = to_json(*r.scal_from_torsion);
  return j;
}

json to_json(const IdentityCertificate& c) {
  json j{{"method", c.method}, {"degree_bound", c.degree_bound}};
  if (c.method == "randomized") {
    j["seed"] = c.seed;
    j["evaluations"] = c.evaluations;
    j["sample_space"] = c.sample_space;
    j["failure_log2"] = number(c.failure_log2);
  }
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const LemmaReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"id", c.id},
                          {"description", c.description},
                          {"applicable", c.applicable},
                          {"holds", c.holds},
                          {"certificate", to_json(c.certificate)}});
  json params = json::array();
  for (const auto& p : r.family.params) params.push_back(p);
  return json{{"paper_algebra", r.paper_algebra},
              {"closed_dimension", r.closed_dimension},
              {"parameters", params},
              {"family", to_json(r.family.base)},
              {"b", to_json(r.b)},
              {"b_identically_zero", r.b_identically_zero},
              {"all_applicable_hold", r.all_applicable_hold()},
              {"checks", checks}};
}

json to_json(const Candidate& c) {
  json j{{"seed", c.seed},
         {"status", to_string(c.status)},
         {"residual", number(c.residual)},
         {"iterations", c.iterations},
         {"p", numbers(c.p)},
         {"diag", numbers(c.diag)}};
  if (!c.refined.empty()) j["refined"] = c.refined;
  if (!c.gauge_fixed.empty()) j["gauge_fixed"] = c.gauge_fixed;
  if (c.status == CandidateStatus::kEinsteinCertified) {
    json pe = json::array(), de = json::array();
    for (const auto& r : c.p_exact) pe.push_back(r.str());
    for (const auto& r : c.diag_exact) de.push_back(r.str());
    j["p_exact"] = pe;
    j["diag_exact"] = de;
  }
  if (c.lambda) j["lambda"] = c.lambda->str();
  if (c.obstruction_inequality) j["obstruction_inequality"] = *c.obstruction_inequality;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const ReproCheck& c) {
  json j{{"id", c.id}, {"description", c.description}, {"kind", c.kind}, {"params", c.params}, {"expected", c.expected}};
  if (!c.verdict.empty()) {
    j["observed"] = c.observed;
    j["verdict"] = c.verdict;
    j["runtime_ms"] = c.runtime_ms;
  }
  return j;
}

// ---------------------------------------------------------------------------

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string", 0);
  return Rational::parse(j.get<std::string>());
}

Polynomial polynomial_from_json(const json& j) {
  Polynomial p;
  for (const auto& t : j.at("poly")) {
    Polynomial mono(rational_from_json(t.at(1)));
    for (const auto& [var, e] : t.at(0).items()) mono *= Polynomial::variable(var).pow(e.get<unsigned>());
    p += mono;
  }
  return p;
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar(rational_from_json(j));
  if (j.contains("coeffs")) {
    NinthRoot::Coeffs c;
    const auto& arr = j.at("coeffs");
    if (arr.size() != c.size()) throw ParseError("ninth-root scalar needs 9 coefficients", 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = rational_from_json(arr[i]);
    return Scalar(NinthRoot(rational_from_json(j.at("modulus")), c));
  }
  if (j.contains("poly")) return Scalar(polynomial_from_json(j));
  throw ParseError("unrecognized scalar encoding", 0);
}

KForm kform_from_json(const json& j) {
  KForm f(Coframe(j.at("dim").get<int>(), j.at("symbol").get<std::string>()), j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) f.add_term(monomial_from_label(t.at(0).get<std::string>()), scalar_from_json(t.at(1)));
  return f;
}

ScalarMatrix matrix_from_json(const json& j) {
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j.at(i).size() != cols) throw ParseError("ragged matrix", 0);
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j.at(i).at(k));
  }
  return m;
}

IdentityCertificate certificate_from_json(const json& j) {
  IdentityCertificate c;
  c.method = j.at("method").get<std::string>();
  c.degree_bound = j.at("degree_bound").get<unsigned>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("evaluations")) c.evaluations = j.at("evaluations").get<int>();
  if (j.contains("sample_space")) c.sample_space = j.at("sample_space").get<std::string>();
  if (j.contains("failure_log2")) c.failure_log2 = number_from_json(j.at("failure_log2"));
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

Candidate candidate_from_json(const json& j) {
  Candidate c;
  c.seed = j.at("seed").get<std::uint64_t>();
  const auto status = j.at("status").get<std::string>();
  bool known = false;
  for (auto s : {CandidateStatus::kDegenerate, CandidateStatus::kNonEinstein, CandidateStatus::kEinsteinNumeric,
                 CandidateStatus::kEinsteinCertified})
    if (to_string(s) == status) {
      c.status = s;
      known = true;
    }
  if (!known) throw ParseError("unknown candidate status " + status, 0);
  c.residual = number_from_json(j.at("residual"));
  c.iterations = j.at("iterations").get<int>();
  c.p = numbers_from_json(j.at("p"));
  c.diag = numbers_from_json(j.at("diag"));
  if (j.contains("refined")) c.refined = j.at("refined").get<std::vector<std::string>>();
  if (j.contains("gauge_fixed")) c.gauge_fixed = j.at("gauge_fixed").get<std::vector<std::string>>();
  if (j.contains("p_exact"))
    for (const auto& r : j.at("p_exact")) c.p_exact.push_back(rational_from_json(r));
  if (j.contains("diag_exact"))
    for (const auto& r : j.at("diag_exact")) c.diag_exact.push_back(rational_from_json(r));
  if (j.contains("lambda")) c.lambda = rational_from_json(j.at("lambda"));
  if (j.contains("obstruction_inequality")) c.obstruction_inequality = j.at("obstruction_inequality").get<bool>();
  if (j.contains("note")) c.note = j.at("note").get<std::string>();
  return c;
}

LieAlgebra algebra_from_json(const json& j) {
  const int n = j.at("dim").get<int>();
  std::string symbol = "e";
  if (j.contains("labels") && !j.at("labels").empty()) {
    symbol = j.at("labels").at(0).get<std::string>();
    while (!symbol.empty() && std::isdigit(static_cast<unsigned char>(symbol.back()))) symbol.pop_back();
  }
  const Coframe space(n, symbol);
  std::vector<KForm> d1;
  for (const auto& d : j.at("differentials")) d1.push_back(parse_form(space, d.get<std::string>(), 2));
  if (static_cast<int>(d1.size()) != n) throw DimensionError("differential count does not match dim");
  return LieAlgebra(space, std::move(d1));
}

ObstructionReport obstruction_from_json(const json& j) {
  ObstructionReport r;
  r.dim_m = j.at("dim_m").get<int>();
  r.dim_n = j.at("dim_n").get<int>();
  r.dim_derived = j.at("dim_derived").get<int>();
  r.dim_center = j.at("dim_center").get<int>();
  r.inequality_holds = j.at("inequality_holds").get<bool>();
  return r;
}

TorsionForms torsion_from_json(const json& j) {
  TorsionForms t;
  t.tau0 = scalar_from_json(j.at("tau0"));
  t.tau1 = kform_from_json(j.at("tau1"));
  t.tau2 = kform_from_json(j.at("tau2"));
  t.tau3 = kform_from_json(j.at("tau3"));
  return t;
}

MetricReport metric_report_from_json(const json& j) {
  MetricReport r;
  r.mode = j.at("mode").get<std::string>();
  r.gram = matrix_from_json(j.at("gram"));
  if (!j.at("signature").is_null()) {
    const auto& s = j.at("signature");
    r.signature = Signature{s.at("positive").get<int>(), s.at("negative").get<int>(), s.at("zero").get<int>()};
  }
  r.ricci = matrix_from_json(j.at("ricci"));
  r.einstein = j.at("einstein").get<bool>();
  if (j.contains("lambda")) r.lambda = scalar_from_json(j.at("lambda"));
  r.scal = scalar_from_json(j.at("scal"));
  return r;
}

G2Report g2_report_from_json(const json& j) {
  G2Report r;
  r.stable = j.at("stable").get<bool>();
  r.orbit_class = j.at("class").get<std::string>();
  r.gram = matrix_from_json(j.at("gram"));
  r.vol_coefficient = scalar_from_json(j.at("vol_coefficient"));
  r.closed = j.at("closed").get<bool>();
  r.coclosed = j.at("coclosed").get<bool>();
  r.harmonic = j.at("harmonic").get<bool>();
  r.torsion = torsion_from_json(j.at("torsion"));
  r.scal = scalar_from_json(j.at("scal"));
  if (j.contains("scal_from_torsion")) r.scal_from_torsion = scalar_from_json(j.at("scal_from_torsion"));
  return r;
}

LemmaReport lemma_report_from_json(const json& j) {
  LemmaReport r;
  r.paper_algebra = j.at("paper_algebra").get<bool>();
  r.closed_dimension = j.at("closed_dimension").get<int>();
  r.family.params = j.at("parameters").get<std::vector<std::string>>();
  r.family.base = kform_from_json(j.at("family"));
  r.b = matrix_from_json(j.at("b"));
  r.b_identically_zero = j.at("b_identically_zero").get<bool>();
  for (const auto& c : j.at("checks")) {
    LemmaCheck k;
    k.id = c.at("id").get<std::string>();
    k.description = c.at("description").get<std::string>();
    k.applicable = c.at("applicable").get<bool>();
    k.holds = c.at("holds").get<bool>();
    k.certificate = certificate_from_json(c.at("certificate"));
    r.checks.push_back(std::move(k));
  }
  return r;
}

ReproCheck repro_check_from_json(const json& j) {
  ReproCheck c;
  c.id = j.at("id").get<std::string>();
  c.description = j.value("description", "");
  c.kind = j.at("kind").get<std::string>();
  c.params = j.value("params", json::object());
  c.expected = j.value("expected", json::object());
  if (j.contains("verdict")) {
    c.observed = j.at("observed");
    c.verdict = j.at("verdict").get<std::string>();
    c.runtime_ms = j.at("runtime_ms").get<double>();
  }
  return c;
}

}  // namespace g2nil::cli

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

#include "cli/reports.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "g2nil/errors.hpp"

namespace g2nil::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t lo = 0, hi = s.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(s[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(s[hi - 1]))) --hi;
  return s.substr(lo, hi - lo);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

Scalar parse_scalar(const std::string& s) {
  auto r = Rational::try_parse(trim(s));
  if (!r) throw ParseError("expected a rational number, got '" + s + "'", 0);
  return Scalar(*r);
}

}  // namespace

FrameSpec parse_frame_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("frame needs '<symbol>:' or '<symbol><-:' prefix", 0);
  FrameSpec spec;
  std::string head = trim(text.substr(0, colon));
  if (head.size() > 2 && head.substr(head.size() - 2) == "<-") {
    spec.old_in_new = false;
    head = trim(head.substr(0, head.size() - 2));
  }
  if (head.empty()) throw ParseError("frame symbol is empty", 0);
  spec.symbol = head;
  spec.forms = split(text.substr(colon + 1), ';');
  return spec;
}

ScalarMatrix frame_matrix(const Coframe& old_space, const FrameSpec& spec) {
  const int n = old_space.dim;
  if (static_cast<int>(spec.forms.size()) != n)
    throw DimensionError("frame has " + std::to_string(spec.forms.size()) + " entries, expected " + std::to_string(n));
  const Coframe new_space(n, spec.symbol);
  const Coframe& src = spec.old_in_new ? new_space : old_space;
  ScalarMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const KForm f = parse_form(src, spec.forms[static_cast<std::size_t>(i)], 1);
    for (const auto& [mask, c] : f.terms()) m(static_cast<std::size_t>(i), static_cast<std::size_t>(mask_indices(mask)[0])) = c;
  }
  return spec.old_in_new ? m : inverse(m);
}

LieAlgebra load_algebra(const std::string& literal_or_path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(literal_or_path, ec)) return parse_structure(literal_or_path);
  std::ifstream in(literal_or_path);
  std::string line, body;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    body += line;
  }
  return parse_structure(body);
}

std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& s : split(text, ',')) out.push_back(parse_scalar(s));
  return out;
}

ScalarMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : split(text, ';')) rows.push_back(parse_scalar_list(r));
  const std::size_t n = rows.size();
  const std::size_t c = n ? rows[0].size() : 0;
  ScalarMatrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MetricReport metric_report(const LieAlgebra& lie, const PseudoMetric& g, RicciMode mode) {
  const EinsteinResult e = einstein_check(lie, g, mode);
  MetricReport r;
  r.mode = to_string(mode);
  r.gram = g.gram();
  r.signature = g.signature();
  r.ricci = e.ricci;
  r.einstein = e.einstein;
  r.lambda = e.lambda;
  r.scal = e.scal;
  return r;
}

bool operator==(const G2Report& a, const G2Report& b) {
  return a.stable == b.stable && a.orbit_class == b.orbit_class && a.gram == b.gram &&
         a.vol_coefficient == b.vol_coefficient && a.closed == b.closed && a.coclosed == b.coclosed &&
         a.harmonic == b.harmonic && a.torsion.tau0 == b.torsion.tau0 && a.torsion.tau1 == b.torsion.tau1 &&
         a.torsion.tau2 == b.torsion.tau2 && a.torsion.tau3 == b.torsion.tau3 && a.scal == b.scal &&
         a.scal_from_torsion == b.scal_from_torsion;
}

G2Report g2_report(const LieAlgebra& lie, const KForm& phi) {
  const G2StarStructure s(phi);
  const HarmonicReport h = harmonic_report(lie, s);
  G2Report r;
  r.stable = true;
  r.orbit_class = to_string(s.orbit_class());
  r.gram = s.metric().gram();
  r.vol_coefficient = s.vol().top_coefficient();
  r.closed = h.closed;
  r.coclosed = h.coclosed;
  r.harmonic = h.harmonic;
  r.torsion = torsion_forms(lie, s);
  r.scal = einstein_check(lie, s.metric()).scal;
  if (r.closed) r.scal_from_torsion = scal_from_torsion(lie, s);
  return r;
}

std::string to_string(RicciMode m) { return m == RicciMode::kNilpotent ? "nilpotent" : "general"; }

RicciMode ricci_mode_from_string(const std::string& s) {
  if (s == "nilpotent") return RicciMode::kNilpotent;
  if (s == "general") return RicciMode::kGeneral;
  throw ParseError("unknown ricci mode '" + s + "'", 0);
}

}  // namespace g2nil::cli

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

#include "cli/repro.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "cli/builtin_manifest.hpp"
#include "g2nil/errors.hpp"

namespace g2nil::cli {

namespace {

using Evaluator = std::function<json(const json& params, const json& expected)>;

// ---------------------------------------------------------------------------
// Parameter decoding.

LieAlgebra algebra_param(const json& p) { return load_algebra(p.at("algebra").get<std::string>()); }

FrameSpec frame_param(const json& f) {
  FrameSpec spec;
  spec.symbol = f.value("symbol", "f");
  if (f.contains("old_in_new")) {
    spec.old_in_new = true;
    spec.forms = f.at("old_in_new").get<std::vector<std::string>>();
  } else {
    spec.old_in_new = false;
    spec.forms = f.at("new_in_old").get<std::vector<std::string>>();
  }
  return spec;
}

std::vector<Scalar> scalars_param(const json& a) {
  std::vector<Scalar> out;
  for (const auto& x : a) out.push_back(Scalar(rational_from_json(x)));
  return out;
}

KForm phi_param(const LieAlgebra& lie, const json& p) { return parse_form(lie.space(), p.at("phi").get<std::string>(), 3); }

// The algebra and metric expressed in the frame named by params, if any.
struct Framed {
  LieAlgebra lie;
  ScalarMatrix m;  // old^i = sum_j m(i, j) new^j (identity without a frame)
};

Framed framed(const LieAlgebra& lie, const json& p) {
  if (!p.contains("frame")) return {lie, ScalarMatrix::identity(static_cast<std::size_t>(lie.dim()))};
  const FrameSpec spec = frame_param(p.at("frame"));
  ScalarMatrix m = frame_matrix(lie.space(), spec);
  return {change_of_basis(lie, m, spec.symbol), m};
}

// ---------------------------------------------------------------------------
// Observation helpers: exact values are written back in the spelling of the
// expectation when they agree with it, so the final comparison is textual.

json put_scalar(const Scalar& s, const json& expected) {
  if (expected.is_string()) {
    if (const auto r = Rational::try_parse(expected.get<std::string>()); r && s == Scalar(*r)) return expected;
  }
  return to_json(s);
}

json put_form(const KForm& f, const json& expected) {
  if (expected.is_string()) {
    try {
      if (parse_form(f.space(), expected.get<std::string>(), f.degree()) == f) return expected;
    } catch (const Error&) {
    }
  }
  return f.str();
}

json put_matrix(const ScalarMatrix& m, const json& expected) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const json e = expected.is_array() && i < expected.size() && j < expected[i].size() ? expected[i][j] : json();
      row.push_back(put_scalar(m(i, j), e));
    }
    rows.push_back(row);
  }
  return rows;
}

json field(const json& expected, const char* key) { return expected.contains(key) ? expected.at(key) : json(); }

std::string signs_of(const std::vector<Scalar>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::string(d[i].sign() < 0 ? "-" : "+");
  return s;
}

ScalarMatrix congruence(const ScalarMatrix& m, const ScalarMatrix& gram) { return m.transposed() * gram * m; }

bool off_diagonal_zero(const ScalarMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return false;
  return true;
}

std::vector<Scalar> diagonal_of(const ScalarMatrix& m) {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
  return d;
}

// ---------------------------------------------------------------------------
// Evaluators.

json eval_einstein(const json& p, const json& exp) {
  const Framed f = framed(algebra_param(p), p);
  const PseudoMetric g = PseudoMetric::diagonal(f.lie.space(), scalars_param(p.at("diag")));
  std::vector<std::string> modes = p.value("modes", std::vector<std::string>{"nilpotent", "general"});
  bool all = true, agree = true;
  std::optional<Scalar> lambda;
  std::optional<ScalarMatrix> first;
  for (const auto& m : modes) {
    const EinsteinResult e = einstein_check(f.lie, g, ricci_mode_from_string(m));
    all = all && e.einstein;
    if (!first) {
      first = e.ricci;
      lambda = e.lambda;
    } else {
      agree = agree && e.ricci == *first;
      if (lambda && e.lambda && !(*lambda == *e.lambda)) lambda.reset();
    }
  }
  json o{{"einstein", all}, {"modes_agree", agree}};
  o["lambda"] = all && lambda ? put_scalar(*lambda, field(exp, "lambda")) : json(nullptr);
  return o;
}

json eval_gram_trace(const json& p, const json& exp) {
  Scalar t(0);
  for (const auto& s : scalars_param(p.at("diag"))) t += s;
  return json{{"trace", put_scalar(t, field(exp, "trace"))}};
}

json eval_structure(const json& p, const json& exp) {
  const Framed f = framed(algebra_param(p), p);
  json o;
  const json e = field(exp, "structure");
  o["structure"] = structure_string(f.lie);
  if (e.is_string()) {
    try {
      if (parse_structure(e.get<std::string>(), f.lie.space().symbol) == f.lie) o["structure"] = e;
    } catch (const Error&) {
    }
  }
  return o;
}

json eval_obstruction(const json& p, const json&) {
  const Framed f = framed(algebra_param(p), p);
  const PseudoMetric g = PseudoMetric::diagonal(f.lie.space(), scalars_param(p.at("diag")));
  return to_json(obstruction_dims(f.lie, g));
}

json eval_lemma(const json& p, const json&) {
  IdentityOptions opt;
  const auto method = p.value("method", "expand");
  if (method == "randomized") opt.method = IdentityMethod::kRandomized;
  else if (method != "expand") throw ParseError("unknown method " + method, 0);
  if (p.contains("seed")) opt.seed = p.at("seed").get<std::uint64_t>();
  const LemmaReport rep = lemma_suite(algebra_param(p), opt);
  json checks = json::object(), certs = json::object();
  for (const auto& id : p.at("checks").get<std::vector<std::string>>()) {
    const auto it = std::find_if(rep.checks.begin(), rep.checks.end(), [&](const LemmaCheck& c) { return c.id == id; });
    if (it == rep.checks.end()) {
      checks[id] = "missing";
      continue;
    }
    checks[id] = it->applicable && it->holds;
    certs[id] = to_json(it->certificate);
  }
  return json{{"closed_dimension", rep.closed_dimension}, {"checks", checks}, {"certificates", certs}};
}

json eval_g2_structure(const json& p, const json& exp) {
  const LieAlgebra lie = algebra_param(p);
  const KForm phi = phi_param(lie, p);
  const G2StarStructure s(phi);
  json o{{"closed", lie.d(phi).is_zero()}, {"class", to_string(s.orbit_class())}};
  if (p.contains("frame")) {
    const ScalarMatrix gram = congruence(framed(lie, p).m, s.metric().gram());
    o["frame_orthogonal"] = off_diagonal_zero(gram);
    const auto d = diagonal_of(gram);
    json diag = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) {
      const json e = field(exp, "frame_gram");
      diag.push_back(put_scalar(d[i], e.is_array() && i < e.size() ? e[i] : json()));
    }
    o["frame_gram"] = diag;
    o["frame_signs"] = signs_of(d);
  }
  return o;
}

json eval_torsion(const json& p, const json& exp) {
  const LieAlgebra lie = algebra_param(p);
  const G2StarStructure s(phi_param(lie, p));
  const TorsionForms t = torsion_forms(lie, s);
  const KForm star_tau = s.star(t.tau2);
  return json{{"tau0", put_scalar(t.tau0, field(exp, "tau0"))},
              {"tau1", put_form(t.tau1, field(exp, "tau1"))},
              {"tau2", put_form(t.tau2, field(exp, "tau2"))},
              {"tau3", put_form(t.tau3, field(exp, "tau3"))},
              {"star_tau", put_form(star_tau, field(exp, "star_tau"))},
              {"tau_wedge_star_tau", put_form(wedge(t.tau2, star_tau), field(exp, "tau_wedge_star_tau"))},
              {"d_tau", put_form(lie.d(t.tau2), field(exp, "d_tau"))}};
}

json eval_harmonic(const json& p, const json& exp) {
  const LieAlgebra lie = algebra_param(p);
  const G2StarStructure s(phi_param(lie, p));
  const HarmonicReport h = harmonic_report(lie, s);
  return json{{"closed", h.closed},
              {"coclosed", h.coclosed},
              {"harmonic", h.harmonic},
              {"star_phi", put_form(s.star_phi(), field(exp, "star_phi"))},
              {"d_star_phi", put_form(h.d_star_phi, field(exp, "d_star_phi"))},
              {"star_d_star_phi", put_form(s.star(h.d_star_phi), field(exp, "star_d_star_phi"))},
              {"laplacian_phi", put_form(h.laplacian_phi, field(exp, "laplacian_phi"))}};
}

json eval_ricci_frame(const json& p, const json& exp) {
  const LieAlgebra lie = algebra_param(p);
  const G2StarStructure s(phi_param(lie, p));
  const Framed f = framed(lie, p);
  const EinsteinResult e = einstein_check(lie, s.metric());
  const ScalarMatrix nil = ricci(lie, s.metric(), RicciMode::kNilpotent);
  return json{{"ricci", put_matrix(congruence(f.m, e.ricci), field(exp, "ricci"))},
              {"modes_agree", nil == e.ricci},
              {"einstein", e.einstein},
              {"scal", put_scalar(e.scal, field(exp, "scal"))}};
}

std::string component_key(int a, int b, int c, int d) {
  return std::to_string(a + 1) + std::to_string(b + 1) + std::to_string(c + 1) + std::to_string(d + 1);
}

// Representative of (a, b, c, d) under R_abcd = -R_bacd = -R_abdc = R_cdab.
std::string canonical_key(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (std::pair(a, b) > std::pair(c, d)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  return component_key(a, b, c, d);
}

json eval_curvature(const json& p, const json& exp) {
  const LieAlgebra lie = algebra_param(p);
  const G2StarStructure s(phi_param(lie, p));
  const Framed f = framed(lie, p);
  const PseudoMetric g(f.lie.space(), congruence(f.m, s.metric().gram()));
  const CurvatureTensor r = riemann(f.lie, g);
  const int n = lie.dim();
  const auto listed = p.at("components").get<std::vector<std::string>>();
  const std::set<std::string> listed_set(listed.begin(), listed.end());
  json comps = json::object();
  const json ec = field(exp, "components");
  for (const auto& key : listed) {
    if (key.size() != 4) throw ParseError("component key must have 4 digits: " + key, 0);
    const int a = key[0] - '1', b = key[1] - '1', c = key[2] - '1', d = key[3] - '1';
    comps[key] = put_scalar(r(a, b, c, d), ec.is_object() && ec.contains(key) ? ec.at(key) : json());
  }
  bool others_zero = true;
  int nonzero = 0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (r(a, b, c, d).is_zero()) continue;
          ++nonzero;
          if (!listed_set.count(canonical_key(a, b, c, d))) others_zero = false;
        }
  const ScalarMatrix ric = ricci(f.lie, g);
  json o{{"frame_gram_diagonal", off_diagonal_zero(g.gram())}, {"frame_signs", signs_of(diagonal_of(g.gram()))},
         {"components", comps}, {"others_zero", others_zero}, {"nonzero_entries", nonzero},
         {"symmetries", r.has_symmetries()}, {"ricci_zero", ric.is_zero()},
         {"ricci_modes_agree", ricci(f.lie, g, RicciMode::kNilpotent) == ric}, {"flat", r.is_zero()}};
  return o;
}

// exp(N) for a nilpotent N (finite series).
ScalarMatrix exp_nilpotent(const ScalarMatrix& nmat) {
  const std::size_t n = nmat.rows();
  ScalarMatrix out = ScalarMatrix::identity(n), term = ScalarMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    term = term * nmat;
    if (term.is_zero()) break;
    out = out + Scalar(Rational(1) / Rational(static_cast<long>(k))) * term;
  }
  return out;
}

bool is_nilpotent(const ScalarMatrix& m) {
  ScalarMatrix t = m;
  for (std::size_t k = 1; k < m.rows(); ++k) t = t * m;
  return t.is_zero();
}

// Closed 3-forms near `phi`: pullbacks by unipotent automorphisms exp(D)
// (D a nilpotent derivation, e.g. ad X) and random members phi + gamma/k of
// the closed family.
std::vector<KForm> deformations(const LieAlgebra& lie, const KForm& phi, const json& spec) {
  std::mt19937_64 rng(spec.value("seed", std::uint64_t{2026}));
  std::uniform_int_distribution<int> small(-2, 2);
  std::vector<KForm> out;

  std::vector<ScalarMatrix> nil;
  for (const auto& d : derivations(lie))
    if (is_nilpotent(d)) nil.push_back(d);
  for (int i = 0; i < lie.dim(); ++i) nil.push_back(lie.ad(i));
  const int autos = spec.value("automorphisms", 8);
  for (int t = 0; t < autos; ++t) {
    // Sums of ad's stay nilpotent; mixing in one derivation at a time keeps
    // the generator nilpotent as long as the check below passes.
    ScalarMatrix d(static_cast<std::size_t>(lie.dim()), static_cast<std::size_t>(lie.dim()));
    for (int i = 0; i < lie.dim(); ++i) d = d + Scalar(small(rng)) * lie.ad(i);
    const ScalarMatrix extra = nil[static_cast<std::size_t>(rng() % nil.size())];
    if (is_nilpotent(d + extra)) d = d + extra;
    out.push_back(change_coframe(phi, exp_nilpotent(d), lie.space()));
  }

  const ParametrizedForm fam = closed_form_space(lie, 3);
  const int members = spec.value("family_members", 8);
  for (int t = 0; t < members; ++t) {
    std::map<std::string, Rational> v;
    for (const auto& name : fam.params) v[name] = Rational(small(rng));
    const Rational k(static_cast<long>(2 + rng() % 8));
    out.push_back(phi + Scalar(k.inverse()) * specialize(fam.base, v));
  }
  return out;
}

json eval_scal_cross(const json& p, const json&) {
  bool agree = true;
  int nonzero = 0;
  json cases = json::object();
  auto check = [&](const LieAlgebra& lie, const G2StarStructure& s) {
    if (!lie.d(s.phi()).is_zero()) throw PreconditionError("scal cross-check needs closed structures");
    const Scalar a = einstein_check(lie, s.metric()).scal;
    const Scalar b = scal_from_torsion(lie, s);
    agree = agree && a == b;
    if (!a.is_zero()) ++nonzero;
    return json{{"scal", to_json(a)}, {"scal_from_torsion", to_json(b)}};
  };
  for (const auto& c : p.at("cases")) {
    const LieAlgebra lie = algebra_param(c);
    cases[c.at("label").get<std::string>()] = check(lie, G2StarStructure(phi_param(lie, c)));
  }
  int deformed = 0;
  if (p.contains("deformations")) {
    const auto& spec = p.at("deformations");
    const LieAlgebra lie = algebra_param(spec);
    for (const auto& f : deformations(lie, phi_param(lie, spec), spec)) {
      try {
        const G2StarStructure s(f);
        check(lie, s);
        ++deformed;
      } catch (const InstabilityError&) {
      }
    }
  }
  return json{{"agree", agree}, {"cases", cases}, {"deformations_checked", deformed}, {"nonzero_scal", nonzero}};
}

json eval_harmonic_scal(const json& p, const json&) {
  struct Item {
    LieAlgebra lie;
    KForm phi;
  };
  std::vector<Item> items;
  for (const auto& c : p.at("cases")) {
    const LieAlgebra lie = algebra_param(c);
    items.push_back({lie, phi_param(lie, c)});
  }
  int generated = 0;
  if (p.contains("deformations")) {
    const auto& spec = p.at("deformations");
    const LieAlgebra lie = algebra_param(spec);
    for (auto& f : deformations(lie, phi_param(lie, spec), spec)) {
      items.push_back({lie, std::move(f)});
      ++generated;
    }
  }
  int closed_stable = 0, harmonic = 0, deformed_harmonic = 0;
  bool scal_zero = true, dtau_zero = true;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& it = items[i];
    if (!it.lie.d(it.phi).is_zero()) continue;
    std::optional<G2StarStructure> st;
    try {
      st.emplace(it.phi);
    } catch (const InstabilityError&) {
      continue;
    }
    const G2StarStructure& s = *st;
    if (s.orbit_class() != OrbitClass::kIndefinite) continue;
    ++closed_stable;
    if (!harmonic_report(it.lie, s).harmonic) continue;
    ++harmonic;
    if (i >= items.size() - static_cast<std::size_t>(generated)) ++deformed_harmonic;
    scal_zero = scal_zero && einstein_check(it.lie, s.metric()).scal.is_zero();
    dtau_zero = dtau_zero && it.lie.d(torsion_closed(it.lie, s)).is_zero();
  }
  return json{{"structures", items.size()},        {"closed_stable", closed_stable},
              {"closed_harmonic", harmonic},        {"deformations_harmonic", deformed_harmonic},
              {"all_scal_zero", scal_zero},         {"all_dtau_zero", dtau_zero}};
}

json eval_search(const json& p, const json& exp) {
  SearchConfig cfg;
  cfg.algebra = algebra_param(p);
  for (const auto& s : p.at("signs").get<std::string>()) {
    if (s == '+') cfg.sign_pattern.push_back(1);
    else if (s == '-') cfg.sign_pattern.push_back(-1);
  }
  const auto seeds = p.at("seeds").get<std::uint64_t>();
  for (std::uint64_t s = 0; s < seeds; ++s) cfg.seeds.push_back(p.value("first_seed", std::uint64_t{0}) + s);
  if (p.contains("radius")) cfg.radius = p.at("radius").get<double>();
  if (p.contains("frame")) {
    // Center = the exact point given by frame + diag.
    const ScalarMatrix m = framed(cfg.algebra, p).m;
    std::vector<double> center;
    for (const auto& [i, j] : parametrize(cfg.algebra).p_index)
      center.push_back(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_double());
    for (const auto& d : scalars_param(p.at("diag"))) center.push_back(d.to_double());
    cfg.center = center;
  }
  const auto candidates = solve(cfg);
  int certified = 0, nonzero = 0;
  bool consistent = true;
  std::set<std::string> lambdas;
  json statuses = json::object();
  for (const auto& c : candidates) {
    statuses[to_string(c.status)] = statuses.value(to_string(c.status), 0) + 1;
    if (c.status != CandidateStatus::kEinsteinCertified) continue;
    ++certified;
    if (c.lambda && c.lambda->sign() != 0) {
      ++nonzero;
      lambdas.insert(c.lambda->str());
      if (c.obstruction_inequality.value_or(false)) consistent = false;
    }
  }
  json ls = json::array();
  const json el = field(exp, "nonzero_lambdas");
  for (const auto& l : lambdas) {
    json matched = l;
    if (el.is_array())
      for (const auto& e : el)
        if (put_scalar(Scalar(Rational::parse(l)), e) == e) matched = e;
    ls.push_back(matched);
  }
  return json{{"candidates", candidates.size()},
              {"statuses", statuses},
              {"all_certified", certified == static_cast<int>(candidates.size())},
              {"certified", certified},
              {"nonzero_lambda_certified", nonzero},
              {"nonzero_lambdas", ls},
              {"obstruction_consistent", consistent}};
}

const std::map<std::string, Evaluator>& evaluators() {
  static const std::map<std::string, Evaluator> table{
      {"einstein", eval_einstein},         {"gram_trace", eval_gram_trace},
      {"structure", eval_structure},       {"obstruction", eval_obstruction},
      {"lemma", eval_lemma},               {"g2_structure", eval_g2_structure},
      {"torsion", eval_torsion},           {"harmonic", eval_harmonic},
      {"ricci_frame", eval_ricci_frame},   {"curvature", eval_curvature},
      {"scal_cross", eval_scal_cross},     {"harmonic_scal", eval_harmonic_scal},
      {"search", eval_search},
  };
  return table;
}

}  // namespace

const std::string& builtin_manifest_text() {
  static const std::string text(kBuiltinManifest);
  return text;
}

std::vector<ReproCheck> parse_manifest(const json& manifest) {
  if (!manifest.is_array()) throw ParseError("manifest must be a JSON array", 0);
  std::vector<ReproCheck> out;
  std::set<std::string> ids;
  for (const auto& j : manifest) {
    out.push_back(repro_check_from_json(j));
    if (!ids.insert(out.back().id).second) throw ParseError("duplicate check id " + out.back().id, 0);
  }
  return out;
}

std::vector<ReproCheck> builtin_manifest() { return parse_manifest(json::parse(builtin_manifest_text())); }

std::vector<std::string> evaluator_kinds() {
  std::vector<std::string> out;
  for (const auto& [k, v] : evaluators()) out.push_back(k);
  return out;
}

bool subset_match(const json& expected, const json& observed) {
  if (expected.is_object()) {
    if (!observed.is_object()) return false;
    for (const auto& [k, v] : expected.items())
      if (!observed.contains(k) || !subset_match(v, observed.at(k))) return false;
    return true;
  }
  return expected == observed;
}

ReproCheck run_check(ReproCheck check) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto it = evaluators().find(check.kind);
    if (it == evaluators().end()) throw PreconditionError("unknown check kind '" + check.kind + "'");
    check.observed = it->second(check.params, check.expected);
    check.verdict = subset_match(check.expected, check.observed) ? "pass" : "fail";
  } catch (const std::exception& e) {
    check.observed = json{{"error", e.what()}};
    check.verdict = "fail";
  }
  check.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return check;
}

std::vector<ReproCheck> run_checks(std::vector<ReproCheck> checks, int threads) {
  const std::size_t workers = std::clamp<std::size_t>(
      threads > 0 ? static_cast<std::size_t>(threads) : std::max(1U, std::thread::hardware_concurrency()), 1,
      std::max<std::size_t>(checks.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) checks[i] = run_check(std::move(checks[i]));
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return checks;
}

}  // namespace g2nil::cli

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

#include "cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "cli/json_io.hpp"
#include "cli/repro.hpp"
#include "cli/reports.hpp"
#include "g2nil/errors.hpp"

namespace g2nil::cli {

namespace {

// Options shared by the subcommands; each subcommand binds what it needs.
struct Options {
  std::string algebra;
  std::string structure;
  std::string frame;
  std::string diag;
  std::string gram;
  std::string mode = "general";
  std::string phi;
  std::string method = "expand";
  std::uint64_t seed = IdentityOptions{}.seed;
  std::string signs;
  std::string seeds = "0..15";
  double tol = NewtonOptions{}.residual_tol;
  int max_iter = NewtonOptions{}.max_iter;
  std::string center;
  double radius = SearchConfig{}.radius;
  bool no_certify = false;
  std::vector<std::string> checks;
  bool all = false;
  bool list = false;
  std::string manifest;
  int threads = 0;
  bool json = false;
};

void add_algebra_options(CLI::App* c, Options& o) {
  c->add_option("--algebra", o.algebra, "Structure equations: a file or a literal such as 0,0,12,13,14,15+23,16+23+24");
  c->add_option("--structure", o.structure, "Structure equations literal");
}

void add_frame_option(CLI::App* c, Options& o) {
  c->add_option("--frame", o.frame,
                "Change of coframe, 'f: e1 in f; e2 in f; ...' (old in new) or 'x<-: x1 in e; ...' (new in old)");
}

void add_json_flag(CLI::App* c, Options& o) { c->add_flag("--json", o.json, "Emit the JSON report"); }

LieAlgebra algebra_of(const Options& o) {
  if (!o.structure.empty()) return parse_structure(o.structure);
  if (!o.algebra.empty()) return load_algebra(o.algebra);
  throw PreconditionError("one of --algebra or --structure is required");
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = std::stoull(text.substr(0, dots));
    const auto hi = std::stoull(text.substr(dots + 2));
    if (hi < lo) throw ParseError("empty seed range " + text, dots);
    for (auto s = lo; s <= hi; ++s) out.push_back(s);
    return out;
  }
  std::stringstream in(text);
  for (std::string tok; std::getline(in, tok, ',');) out.push_back(std::stoull(tok));
  return out;
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (char ch : text) {
    if (ch == '+') out.push_back(1);
    else if (ch == '-') out.push_back(-1);
    else if (ch != ',' && ch != ' ') throw ParseError("signs are '+' or '-' separated by commas", 0);
  }
  return out;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Subcommand bodies; each returns an exit code.

int cmd_algebra_check(const Options& o, std::ostream& out) {
  LieAlgebra lie;
  try {
    lie = algebra_of(o);
  } catch (const NotALieAlgebraError& e) {
    if (o.json) print_json(out, json{{"lie_algebra", false}, {"error", e.what()}, {"generator", e.generator() + 1}});
    else out << "not a Lie algebra: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  const StructureReport r = structure_report(lie);
  const NiceBasisReport nice = is_nice_basis(lie);
  const bool traceless = derivations_traceless(lie);
  if (o.json) {
    print_json(out, json{{"lie_algebra", true},
                         {"algebra", to_json(lie)},
                         {"structure", to_json(r)},
                         {"nice_basis", nice.nice},
                         {"derivations_traceless", traceless}});
    return kExitOk;
  }
  out << "structure equations: (" << structure_string(lie) << ")\n"
      << "dimension: " << lie.dim() << "\n"
      << "center: " << r.center.str(lie.space().symbol) << " (dim " << r.center.dim() << ")\n"
      << "derived algebra: " << r.derived.str(lie.space().symbol) << " (dim " << r.derived.dim() << ")\n"
      << "lower central series dims:";
  for (int d : r.lower_central_dims) out << " " << d;
  out << "\nnilpotent: " << yes_no(r.nilpotent);
  if (r.nilpotent) out << " (step " << r.step << ")";
  out << "\nunimodular: " << yes_no(r.unimodular) << "\nKilling form zero: " << yes_no(r.killing_zero)
      << "\nnice basis: " << yes_no(nice.nice) << "\nall derivations traceless: " << yes_no(traceless) << "\n";
  return kExitOk;
}

struct MetricInput {
  LieAlgebra lie;
  PseudoMetric g;
};

MetricInput metric_input(const Options& o) {
  LieAlgebra lie = algebra_of(o);
  if (!o.frame.empty()) {
    const FrameSpec spec = parse_frame_spec(o.frame);
    lie = change_of_basis(lie, frame_matrix(lie.space(), spec), spec.symbol);
  }
  if (o.diag.empty() == o.gram.empty()) throw PreconditionError("exactly one of --diag or --gram is required");
  PseudoMetric g = o.diag.empty() ? PseudoMetric(lie.space(), parse_matrix(o.gram))
                                  : PseudoMetric::diagonal(lie.space(), parse_scalar_list(o.diag));
  return {std::move(lie), std::move(g)};
}

int cmd_metric(const Options& o, std::ostream& out, bool einstein_only) {
  const MetricInput in = metric_input(o);
  const MetricReport r = metric_report(in.lie, in.g, ricci_mode_from_string(o.mode));
  if (o.json) {
    print_json(out, to_json(r));
  } else {
    if (!einstein_only) out << "Ric (" << r.mode << ", frame " << in.lie.space().symbol << "):\n" << r.ricci << "\n";
    if (r.signature) out << "signature: (" << r.signature->negative << " negative, " << r.signature->positive << " positive)\n";
    out << "scal: " << r.scal << "\n";
    if (r.einstein) out << "Einstein: yes, Ric = " << *r.lambda << " g\n";
    else out << "Einstein: no\n";
  }
  return einstein_only && !r.einstein ? kExitCheckFailed : kExitOk;
}

int cmd_g2(const Options& o, std::ostream& out, const std::string& what) {
  const LieAlgebra lie = algebra_of(o);
  if (o.phi.empty()) throw PreconditionError("--phi is required");
  const KForm phi = parse_form(lie.space(), o.phi, 3);
  G2Report r;
  try {
    r = g2_report(lie, phi);
  } catch (const InstabilityError& e) {
    if (o.json) print_json(out, json{{"stable", false}, {"error", e.what()}});
    else out << "not stable: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  if (o.json) {
    json j = to_json(r);
    if (!o.frame.empty()) {
      const ScalarMatrix m = frame_matrix(lie.space(), parse_frame_spec(o.frame));
      j["frame_gram"] = to_json(m.transposed() * r.gram * m);
    }
    print_json(out, j);
  } else if (what == "induce") {
    out << "stable: yes\nclass: " << r.orbit_class << "\nvolume coefficient: " << r.vol_coefficient
        << "\nGram matrix:\n" << r.gram << "\n";
    if (!o.frame.empty()) {
      const FrameSpec spec = parse_frame_spec(o.frame);
      const ScalarMatrix m = frame_matrix(lie.space(), spec);
      out << "Gram matrix in frame " << spec.symbol << ":\n" << m.transposed() * r.gram * m << "\n";
    }
    out << "closed: " << yes_no(r.closed) << "\n";
  } else if (what == "torsion") {
    out << "tau0 = " << r.torsion.tau0 << "\ntau1 = " << r.torsion.tau1 << "\ntau2 = " << r.torsion.tau2
        << "\ntau3 = " << r.torsion.tau3 << "\nscal = " << r.scal << "\n";
    if (r.scal_from_torsion) out << "scal from torsion = " << *r.scal_from_torsion << "\n";
  } else {
    out << "closed=" << std::boolalpha << r.closed << " coclosed=" << r.coclosed << " harmonic=" << r.harmonic
        << std::noboolalpha << "\nscal = " << r.scal << "\n";
  }
  return what == "harmonic" && !r.harmonic ? kExitCheckFailed : kExitOk;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  IdentityOptions opt;
  if (o.method == "randomized") opt.method = IdentityMethod::kRandomized;
  else if (o.method != "expand") throw PreconditionError("--method must be expand or randomized");
  opt.seed = o.seed;
  opt.threads = o.threads;
  const LemmaReport r = lemma_suite(algebra_of(o), opt);
  if (o.json) {
    print_json(out, to_json(r));
  } else {
    out << "closed 3-forms: " << r.closed_dimension << " parameters\n"
        << "b identically zero: " << yes_no(r.b_identically_zero) << "\n";
    for (const auto& c : r.checks) {
      out << (c.applicable ? (c.holds ? "PASS " : "FAIL ") : "N/A  ") << std::left << std::setw(20) << c.id << " "
          << c.description << " [" << c.certificate.method;
      if (c.certificate.method == "randomized")
        out << ", seed " << c.certificate.seed << ", " << c.certificate.evaluations << " evaluations, P(false zero) <= 2^"
            << c.certificate.failure_log2;
      out << "]\n";
    }
  }
  return r.all_applicable_hold() ? kExitOk : kExitCheckFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig cfg;
  cfg.algebra = algebra_of(o);
  cfg.sign_pattern = parse_signs(o.signs);
  cfg.seeds = parse_seeds(o.seeds);
  cfg.newton.residual_tol = o.tol;
  cfg.newton.max_iter = o.max_iter;
  cfg.radius = o.radius;
  cfg.certify = !o.no_certify;
  cfg.threads = o.threads;
  if (!o.center.empty()) {
    std::vector<double> c;
    for (const auto& s : parse_scalar_list(o.center)) c.push_back(s.to_double());
    cfg.center = c;
  }
  validate(cfg);
  const auto cands = solve(cfg);
  if (o.json) {
    json a = json::array();
    for (const auto& c : cands) a.push_back(to_json(c));
    print_json(out, a);
    return kExitOk;
  }
  for (const auto& c : cands) {
    out << "seed " << c.seed << ": " << to_string(c.status) << " residual " << c.residual << " iterations "
        << c.iterations;
    if (c.lambda) out << " lambda " << *c.lambda;
    out << "\n";
  }
  return kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<ReproCheck> manifest;
  if (o.manifest.empty()) {
    manifest = builtin_manifest();
  } else {
    std::ifstream in(o.manifest);
    if (!in) throw PreconditionError("cannot read manifest " + o.manifest);
    manifest = parse_manifest(json::parse(in));
  }
  if (o.list) {
    for (const auto& c : manifest) out << std::left << std::setw(24) << c.id << " " << c.description << "\n";
    return kExitOk;
  }
  if (o.all == !o.checks.empty()) throw PreconditionError("give either --all or one or more --check ID");
  std::vector<ReproCheck> selected;
  if (o.all) {
    selected = manifest;
  } else {
    for (const auto& id : o.checks) {
      const auto it = std::find_if(manifest.begin(), manifest.end(), [&](const ReproCheck& c) { return c.id == id; });
      if (it == manifest.end()) {
        err << "unknown check '" << id << "'; use --list\n";
        return kExitUsage;
      }
      selected.push_back(*it);
    }
  }
  const auto results = run_checks(std::move(selected), o.threads);
  const bool ok = std::all_of(results.begin(), results.end(), [](const ReproCheck& c) { return c.verdict == "pass"; });
  if (o.json) {
    json a = json::array();
    for (const auto& c : results) a.push_back(to_json(c));
    print_json(out, a);
  } else {
    for (const auto& c : results) {
      out << (c.verdict == "pass" ? "PASS " : "FAIL ") << std::left << std::setw(24) << c.id << " " << std::right
          << std::setw(9) << std::fixed << std::setprecision(1) << c.runtime_ms << " ms  " << c.description << "\n";
      if (c.verdict != "pass")
        out << "  expected: " << c.expected.dump() << "\n  observed: " << c.observed.dump() << "\n";
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const ReproCheck& c) { return c.verdict == "pass"; });
    out << passed << "/" << results.size() << " checks passed\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact left-invariant geometry on nilpotent Lie algebras and G2*-structures", "g2nil"};
  app.require_subcommand(1);
  std::function<int()> action;

  auto* algebra = app.add_subcommand("algebra", "Lie algebra tools")->require_subcommand(1);
  auto* check = algebra->add_subcommand("check", "Validate structure equations and report invariants");
  add_algebra_options(check, o);
  add_json_flag(check, o);
  check->callback([&] { action = [&] { return cmd_algebra_check(o, out); }; });

  auto* metric = app.add_subcommand("metric", "Curvature of left-invariant pseudo-metrics")->require_subcommand(1);
  for (const char* name : {"ricci", "einstein"}) {
    auto* c = metric->add_subcommand(name, std::string(name) == "ricci" ? "Ricci tensor" : "Einstein test (exit 1 if not)");
    add_algebra_options(c, o);
    add_frame_option(c, o);
    c->add_option("--diag", o.diag, "Diagonal Gram matrix in the (new) frame, comma separated");
    c->add_option("--gram", o.gram, "Gram matrix in the (new) frame, rows separated by ';'");
    c->add_option("--mode", o.mode, "Ricci formula")->check(CLI::IsMember({"general", "nilpotent"}));
    add_json_flag(c, o);
    const bool einstein = std::string(name) == "einstein";
    c->callback([&, einstein] { action = [&, einstein] { return cmd_metric(o, out, einstein); }; });
  }

  auto* g2 = app.add_subcommand("g2", "G2*-structures defined by 3-forms")->require_subcommand(1);
  for (const char* name : {"induce", "torsion", "harmonic"}) {
    auto* c = g2->add_subcommand(name, std::string(name) == "induce"     ? "Induced metric and orbit"
                                       : std::string(name) == "torsion" ? "Torsion forms"
                                                                         : "Closed / coclosed / harmonic test (exit 1 if not harmonic)");
    add_algebra_options(c, o);
    c->add_option("--phi", o.phi, "3-form literal, e.g. e137+2*e156-2*e157+e235-e237+e246+e345");
    if (std::string(name) == "induce") add_frame_option(c, o);
    add_json_flag(c, o);
    const std::string what = name;
    c->callback([&, what] { action = [&, what] { return cmd_g2(o, out, what); }; });
  }

  auto* lemmas = app.add_subcommand("lemmas", "Identities of the generic closed 3-form")->require_subcommand(1);
  auto* verify = lemmas->add_subcommand("verify", "Verify the vanishing lemmas (exit 1 on failure)");
  add_algebra_options(verify, o);
  verify->add_option("--method", o.method, "Zero test for large identities")->check(CLI::IsMember({"expand", "randomized"}));
  verify->add_option("--seed", o.seed, "Master seed of the randomized test");
  verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_json_flag(verify, o);
  verify->callback([&] { action = [&] { return cmd_lemmas(o, out); }; });

  auto* search = app.add_subcommand("search", "Numeric search for Einstein metrics")->require_subcommand(1);
  auto* einstein = search->add_subcommand("einstein", "Multi-start search for diagonal Einstein metrics");
  add_algebra_options(einstein, o);
  einstein->add_option("--signs", o.signs, "Sign pattern of the diagonal metric, e.g. -,-,-,-,+,+,+")->required();
  einstein->add_option("--seeds", o.seeds, "Seeds: 'a..b' or a comma list");
  einstein->add_option("--tol", o.tol, "Residual tolerance of the numeric solve");
  einstein->add_option("--max-iter", o.max_iter, "Iteration limit per start");
  einstein->add_option("--center", o.center, "Start near this point: p values then diagonal, comma separated");
  einstein->add_option("--radius", o.radius, "Relative perturbation around --center");
  einstein->add_flag("--no-certify", o.no_certify, "Skip rational reconstruction");
  einstein->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_json_flag(einstein, o);
  einstein->callback([&] { action = [&] { return cmd_search(o, out); }; });

  auto* paper = app.add_subcommand("paper", "Reproduction checklist")->require_subcommand(1);
  auto* repro = paper->add_subcommand("reproduce", "Run reproduction checks (exit 1 if any fails)");
  repro->add_option("--check", o.checks, "Check id (repeatable)");
  repro->add_flag("--all", o.all, "Run every check");
  repro->add_flag("--list", o.list, "List check ids");
  repro->add_option("--manifest", o.manifest, "Use this manifest instead of the built-in one");
  repro->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_json_flag(repro, o);
  repro->callback([&] { action = [&] { return cmd_reproduce(o, out, err); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    return action ? action() : kExitUsage;
  } catch (const NotALieAlgebraError& e) {
    err << "error: not a Lie algebra: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace g2nil::cli

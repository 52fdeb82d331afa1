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

// Acceptance runner: one PASS/FAIL line per criterion. Criteria 1-9 run the
// corresponding entries of the built-in reproduction checklist; criterion
// 10 runs the randomized exact property suites. Exit status is 0 iff every
// selected criterion passes.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/repro.hpp"
#include "support/properties.hpp"

namespace {

using g2nil::cli::ReproCheck;

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;  // manifest ids; empty for custom bodies
  double budget_ms;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "Einstein constant on g, both Ricci paths", {"thm-2.2"}, 5e3},
      {2, "Trace of the Einstein Gram diagonal is -1", {"thm-2.2-trace"}, 1e3},
      {3, "Closed 3-form lemma suite on g", {"lemma-3.1", "lemma-3.2", "lemma-3.2-randomized", "lemma-3.3"}, 60e3},
      {4, "Closed G2* structure on g, orthonormal h-frame", {"thm-3.6"}, 5e3},
      {5, "Closed harmonic non-coclosed structure on g", {"ex-4.1-harmonic", "ex-4.1-torsion", "ex-4.1-ricci"}, 10e3},
      {6, "Ricci-flat non-flat harmonic structure on n",
       {"ex-4.2-structure", "ex-4.2-harmonic", "ex-4.2-torsion", "ex-4.2-curvature"}, 10e3},
      {7, "Scalar curvature from torsion equals contraction", {"prop-4.4"}, 60e3},
      {8, "Closed harmonic structures have scal = 0, d tau = 0", {"thm-4.5"}, 60e3},
      {9, "Einstein search replication", {"search-neighborhood", "prop-2.1-search"}, 600e3},
      {10, "Exact randomized property suites (>= 200 cases each)", {}, 120e3},
  };
  return c;
}

Outcome run_manifest(const Criterion& c, int threads) {
  std::vector<ReproCheck> selected;
  const auto all = g2nil::cli::builtin_manifest();
  for (const auto& id : c.checks) {
    bool found = false;
    for (const auto& m : all)
      if (m.id == id) selected.push_back(m), found = true;
    if (!found) return {false, {"missing checklist entry " + id}};
  }
  Outcome out;
  for (const auto& r : g2nil::cli::run_checks(selected, threads)) {
    std::ostringstream line;
    line << (r.verdict == "pass" ? "ok   " : "FAIL ") << r.id << " (" << std::fixed << std::setprecision(1)
         << r.runtime_ms << " ms)";
    out.details.push_back(line.str());
    if (r.verdict != "pass") {
      out.pass = false;
      out.details.push_back("  expected: " + r.expected.dump());
      out.details.push_back("  observed: " + r.observed.dump());
    }
  }
  return out;
}

Outcome run_properties(std::uint64_t seed, int cases) {
  using namespace g2nil::testing;
  Outcome out;
  for (const auto& p : {property_d_squared(seed, cases), property_star_star(seed + 1, cases),
                        property_wedge_contraction(seed + 2, cases), property_curvature(seed + 3, cases),
                        property_ricci_modes(seed + 4, cases)}) {
    out.details.push_back((p.ok() ? "ok   " : "FAIL ") + p.name + ": " + std::to_string(p.cases) + " cases, " +
                          std::to_string(p.failures) + " failures");
    if (!p.ok()) {
      out.pass = false;
      if (!p.first_failure.empty()) out.details.push_back("  first: " + p.first_failure);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"g2nil acceptance runner"};
  std::vector<int> only;
  int threads = 0;
  std::uint64_t seed = 2026;
  int cases = 200;
  bool verbose = false;
  app.add_option("--only", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  app.add_option("--threads", threads, "Worker threads for checklist entries (0: hardware)");
  app.add_option("--seed", seed, "Master seed of the property suites");
  app.add_option("--cases", cases, "Cases per property suite")->check(CLI::Range(200, 1'000'000));
  app.add_flag("-v,--verbose", verbose, "Print per-check details for passing criteria too");
  CLI11_PARSE(app, argc, argv);

  const std::set<int> wanted(only.begin(), only.end());
  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.number)) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.checks.empty() ? run_properties(seed, cases) : run_manifest(c, threads);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (ms > c.budget_ms) {
      o.pass = false;
      o.details.push_back("runtime budget exceeded: " + std::to_string(ms) + " ms > " + std::to_string(c.budget_ms));
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << c.number << "  " << std::left
              << std::setw(56) << c.title << std::right << std::fixed << std::setprecision(1) << std::setw(10) << ms
              << " ms\n";
    if (!o.pass || verbose)
      for (const auto& d : o.details) std::cout << "    " << d << "\n";
    if (!o.pass) ++failed;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

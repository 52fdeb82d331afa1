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

// Command-line front end: JSON round-trips, exit codes and the
// reproduction harness.

#include <sstream>

#include "cli/app.hpp"
#include "cli/json_io.hpp"
#include "cli/repro.hpp"
#include "cli/reports.hpp"
#include "doctest.h"
#include "g2nil/generic.hpp"
#include "support/fixtures.hpp"

using namespace g2nil;
using namespace g2nil::cli;
using namespace g2nil::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_tool(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// parse(emit(x)) re-emits identically.
template <typename T, typename Parse>
void check_json_round_trip(const T& x, Parse parse) {
  const json j = to_json(x);
  CHECK(to_json(parse(json::parse(j.dump()))) == j);
}

}  // namespace

TEST_CASE("scalars round-trip through JSON") {
  for (const char* s : {"0", "-3/7", "123456789012345678901234567891/7"}) {
    const Rational r = Rational::parse(s);
    CHECK(to_json(r) == json(s));
    CHECK(rational_from_json(to_json(r)) == r);
  }
  const Scalar d = Scalar::ninth_root_of(frac(-5, 3));
  const Scalar x = d * d + Scalar(frac(1, 2));
  CHECK(to_json(x).contains("modulus"));
  CHECK(scalar_from_json(to_json(x)) == x);
  const Polynomial p = Polynomial::variable("c137").pow(2) * frac(-2, 3) + Polynomial::variable("c235");
  CHECK(polynomial_from_json(to_json(p)) == p);
  CHECK(scalar_from_json(to_json(Scalar(p))) == Scalar(p));
}

TEST_CASE("forms, matrices and algebras round-trip through JSON") {
  Rng rng(4);
  const Coframe h(7, "h");
  for (int k = 0; k <= 7; ++k) {
    const KForm f = random_form(h, k, rng);
    CHECK(kform_from_json(to_json(f)) == f);
  }
  const ScalarMatrix m = random_invertible(5, rng);
  CHECK(matrix_from_json(to_json(m)) == m);
  const LieAlgebra g = parse_structure(kAlgebraG);
  CHECK(algebra_from_json(to_json(g)) == g);
  const ParametrizedForm family = closed_form_space(g, 3);
  CHECK(kform_from_json(to_json(family.base)) == family.base);
}

TEST_CASE("reports round-trip through JSON") {
  const LieAlgebra g = parse_structure(kAlgebraG);
  const KForm phi = parse_form(g.space(), kPhiG);
  const G2Report r = g2_report(g, phi);
  CHECK(g2_report_from_json(to_json(r)) == r);
  check_json_round_trip(r, g2_report_from_json);

  const MetricReport m = metric_report(g, PseudoMetric(g.space(), ScalarMatrix::identity(7)), RicciMode::kGeneral);
  CHECK(metric_report_from_json(to_json(m)) == m);

  const LieAlgebra f = change_of_basis(g, einstein_frame(), "f");
  const ObstructionReport o = obstruction_dims(f, PseudoMetric::diagonal(f.space(), einstein_diagonal()));
  const ObstructionReport o2 = obstruction_from_json(to_json(o));
  CHECK(o2.dim_m == o.dim_m);
  CHECK(o2.inequality_holds == o.inequality_holds);
  check_json_round_trip(o, obstruction_from_json);

  check_json_round_trip(torsion_forms(g, G2StarStructure(phi)), torsion_from_json);
  check_json_round_trip(lemma_suite(g), lemma_report_from_json);
}

TEST_CASE("search candidates round-trip, including non-finite values") {
  Candidate c;
  c.seed = 42;
  c.p = {0.5, std::nan(""), -1e300};
  c.diag = {1.0, -std::numeric_limits<double>::infinity()};
  c.residual = std::numeric_limits<double>::infinity();
  c.status = CandidateStatus::kEinsteinCertified;
  c.p_exact = {frac(1, 2)};
  c.lambda = frac(-3, 4);
  c.obstruction_inequality = false;
  c.note = "x";
  const Candidate d = candidate_from_json(json::parse(to_json(c).dump()));
  CHECK(std::isnan(d.p[1]));
  CHECK(d.p[0] == 0.5);
  CHECK(d.diag[1] == -std::numeric_limits<double>::infinity());
  CHECK(d.lambda == c.lambda);
  CHECK(d.status == c.status);
  check_json_round_trip(c, candidate_from_json);
}

TEST_CASE("checklist entries round-trip before and after running") {
  const auto manifest = builtin_manifest();
  REQUIRE(!manifest.empty());
  for (const auto& c : manifest) CHECK(repro_check_from_json(to_json(c)) == c);
  const ReproCheck ran = run_check(manifest.front());
  CHECK(ran.verdict == "pass");
  CHECK(repro_check_from_json(json::parse(to_json(ran).dump())) == ran);
}

TEST_CASE("subset matching") {
  const json observed = {{"a", "1/2"}, {"b", {{"c", true}, {"d", 3}}}, {"e", json::array({1, 2})}};
  CHECK(subset_match(json::object(), observed));
  CHECK(subset_match({{"a", "1/2"}}, observed));
  CHECK(subset_match({{"b", {{"c", true}}}}, observed));
  CHECK_FALSE(subset_match({{"b", {{"c", false}}}}, observed));
  CHECK_FALSE(subset_match({{"e", json::array({1})}}, observed));
  CHECK_FALSE(subset_match({{"z", 1}}, observed));
}

TEST_CASE("manifests reject duplicate ids and unknown kinds") {
  const json dup = json::parse(R"([{"id":"x","description":"","kind":"gram_trace","params":{"diag":["1"]},"expected":{}},
                                  {"id":"x","description":"","kind":"gram_trace","params":{"diag":["1"]},"expected":{}}])");
  CHECK_THROWS(parse_manifest(dup));
  const json bad = json::parse(R"([{"id":"y","description":"","kind":"nope","params":{},"expected":{}}])");
  const auto checks = parse_manifest(bad);
  CHECK(run_check(checks[0]).verdict == "fail");
}

TEST_CASE("exit codes") {
  CHECK(run_tool({}).code == kExitUsage);
  CHECK(run_tool({"--no-such-flag"}).code == kExitUsage);
  CHECK(run_tool({"algebra", "check", "--bogus"}).code == kExitUsage);
  CHECK(run_tool({"algebra", "check", "--algebra", "0,0,0,12,34"}).code == kExitCheckFailed);
  CHECK(run_tool({"algebra", "check", "--algebra", "0,0,1x"}).code == kExitUsage);
  CHECK(run_tool({"algebra", "check", "--algebra", kAlgebraG}).code == kExitOk);
  CHECK(run_tool({"g2", "induce", "--phi", "e123"}).code != kExitOk);
  CHECK(run_tool({"metric", "einstein", "--algebra", "0,0,12", "--diag", "1,1,1"}).code == kExitCheckFailed);
  CHECK(run_tool({"metric", "einstein", "--algebra", "0,0,0", "--diag", "1,-1,1"}).code == kExitOk);
  CHECK(run_tool({"paper", "reproduce", "--check", "no-such-check"}).code == kExitUsage);
  CHECK(run_tool({"paper", "reproduce", "--list"}).code == kExitOk);
}

TEST_CASE("g2 harmonic on n") {
  const Run r = run_tool({"g2", "harmonic", "--algebra", kAlgebraN, "--phi", kPsiN, "--json"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["closed"] == true);
  CHECK(j["coclosed"] == false);
  CHECK(j["harmonic"] == true);
}

TEST_CASE("paper reproduce --check thm-2.2") {
  const Run r = run_tool({"paper", "reproduce", "--check", "thm-2.2", "--json"});
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  const json& check = j.is_array() ? j[0] : j["checks"][0];
  CHECK(check["verdict"] == "pass");
  CHECK(check["observed"]["lambda"] == "48661191875666868481/659081523200000000000");
}

TEST_CASE("metric einstein reports the exact constant") {
  const Run r = run_tool({"metric", "einstein", "--algebra", kAlgebraG, "--frame",
                          "f: f1; f2; -26/51*f2+f3; -2300/2601*f2-26/51*f3+f4; -2300/2601*f3+46/51*f4+f5; "
                          "-2300/2601*f4+f6; -50/51*f6+f7",
                          "--diag",
                          "71639296000000000/168377826559400929,-1946720000000/2015993900449,-2116000000/6975757441,"
                          "21160000/24137569,-115000/250563,-600/289,1",
                          "--mode", "nilpotent", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["lambda"] == "48661191875666868481/659081523200000000000");
}

TEST_CASE("reproduction is deterministic across thread counts" * doctest::test_suite("slow")) {
  const auto serial = run_checks(builtin_manifest(), 1);
  const auto parallel = run_checks(builtin_manifest(), 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].id == parallel[i].id);
    CHECK(serial[i].verdict == parallel[i].verdict);
    CHECK(serial[i].observed == parallel[i].observed);
  }
}

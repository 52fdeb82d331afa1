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

// Data-driven reproduction checklist. A manifest is a JSON array of
// {id, description, kind, params, expected}; `kind` names an evaluator that
// turns params into an observed JSON object. A check passes iff every field
// of `expected` is present in `observed` with an equal value (exact
// rationals and forms are normalized before comparison).

#ifndef G2NIL_TOOLS_REPRO_HPP
#define G2NIL_TOOLS_REPRO_HPP

#include <string>
#include <vector>

#include "cli/json_io.hpp"

namespace g2nil::cli {

/// The built-in checklist (embedded at build time).
const std::string& builtin_manifest_text();

std::vector<ReproCheck> parse_manifest(const json& manifest);
std::vector<ReproCheck> builtin_manifest();

/// Names of the available evaluators.
std::vector<std::string> evaluator_kinds();

/// Runs one check; evaluator exceptions become a failing verdict with
/// {"error": message} as the observation.
ReproCheck run_check(ReproCheck check);

/// Runs checks on a worker pool; results keep the input order.
std::vector<ReproCheck> run_checks(std::vector<ReproCheck> checks, int threads = 0);

/// True iff every key of `expected` appears in `observed` with an equal
/// value (recursively for objects; arrays and scalars compare exactly).
bool subset_match(const json& expected, const json& observed);

}  // namespace g2nil::cli

#endif  // G2NIL_TOOLS_REPRO_HPP

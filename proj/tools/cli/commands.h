// Copyright 2026 The qlll Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QLLL_TOOLS_COMMANDS_H
#define QLLL_TOOLS_COMMANDS_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qlll/tolerance.h"

namespace qlll::cli {

/// Every flag any verb understands. Verbs ignore what they do not use.
struct Options {
    std::string instance;
    std::string mode = "test";
    std::optional<std::string> seq;
    std::optional<std::string> given;
    std::optional<std::string> k;
    std::optional<std::string> l;
    std::optional<std::string> j;
    size_t i = 0;
    bool negative = false;
    std::string variant = "general";
    std::optional<std::string> x;
    std::optional<double> p;
    uint64_t n = 100000;
    std::optional<uint64_t> seed;
    unsigned workers = 1;
    bool exact = false;
    size_t cap = 1'000'000;
    std::string kind = "random-projective";
    size_t n_events = 3;
    size_t local_dim = 2;
    size_t window = 1;
    size_t outcomes = 0;
    bool symmetric_satisfying = false;
    std::optional<std::string> expectations;
    std::optional<std::string> out;
    ToleranceConfig tol;
};

struct Result {
    nlohmann::json output;
    int exit_code = 0;
};

Result cmd_prob(const Options &o);
Result cmd_cond(const Options &o);
Result cmd_indep(const Options &o);
Result cmd_profile(const Options &o);
Result cmd_check(const Options &o);
Result cmd_sample(const Options &o);
Result cmd_paper_examples(const Options &o);
Result cmd_gen(const Options &o);

/// Dispatches by verb name and maps library errors onto the exit-code
/// contract: ConditionOnZero is 1, every other error is 2.
Result run(const std::string &verb, const Options &o);

std::vector<double> parse_csv(const std::string &text);

}  // namespace qlll::cli

#endif

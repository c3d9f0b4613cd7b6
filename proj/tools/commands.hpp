// Copyright 2026 The cliff4 Authors
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


#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace cliff4::cli {

struct RunConfig {
    std::string command;
    int n = 1;
    int t = 4;
    double tol = 1e-9;
    int64_t samples = 100000;
    uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    int threads = 0;
};

struct StateSource {
    std::string named;
    std::vector<std::string> product;  // factors when given as a list
    std::string file;
};

struct ConstructArgs {
    enum class Mode { Complete, Bisect, Weighted } mode = Mode::Complete;
    std::vector<std::string> base;
    int max_iter = 200;
    bool secant = false;
    std::string state_out;
};

struct CommandOutput {
    nlohmann::json body;
    bool pass = true;
    std::string csv;  // empty: flattened from body
};

CommandOutput cmd_tables(const RunConfig &cfg);
CommandOutput cmd_check(const RunConfig &cfg, const StateSource &src);
CommandOutput cmd_construct(const RunConfig &cfg, const ConstructArgs &args);
CommandOutput cmd_moments(const RunConfig &cfg, int64_t lipschitz_pairs);
CommandOutput cmd_singer(const RunConfig &cfg, const std::vector<int> &ns);
CommandOutput cmd_orbit(const RunConfig &cfg, const StateSource &src, bool force_mc);

/// "path,value" lines for every scalar leaf of a JSON document.
std::string flatten_csv(const nlohmann::json &j);

/// Parses argv, runs one command and writes its output. Returns 0 iff every
/// embedded assertion passed, 1 on a failed assertion, 2 on an error.
int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace cliff4::cli

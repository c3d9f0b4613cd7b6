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

#include <string>

#include "cliff4/common.hpp"
#include "json.hpp"

namespace cliff4 {

/// Carries the 1-based line of the offending input.
struct StateParseError : std::runtime_error {
    StateParseError(const std::string &what, int line) : std::runtime_error(what), line(line) {
    }
    int line;
};

/// {"n": int, "amplitudes": [[re, im], ...]}; the state must be normalized.
StateVector parse_state_json(const std::string &text);
StateVector read_state_file(const std::string &path);
nlohmann::json state_to_json(const StateVector &psi);
void write_state_file(const std::string &path, const StateVector &psi);

/// {"exact": "p/q", "value": double}.
nlohmann::json rational_json(const Rational &r);

}  // namespace cliff4

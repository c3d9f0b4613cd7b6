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


#include "cliff4/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cliff4 {

namespace {

int line_of(const std::string &text, size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + int(std::count(text.begin(), text.begin() + int64_t(byte), '\n'));
}

// First line containing the key, or 1 if it is absent.
int line_of_key(const std::string &text, const std::string &key) {
    size_t pos = text.find("\"" + key + "\"");
    return pos == std::string::npos ? 1 : line_of(text, pos);
}

}  // namespace

StateVector parse_state_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        int line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
        throw StateParseError("line " + std::to_string(line) + ": " + e.what(), line);
    }
    auto fail = [&](const std::string &key, const std::string &msg) -> StateParseError {
        int line = line_of_key(text, key);
        return StateParseError("line " + std::to_string(line) + ": " + msg, line);
    };
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw fail("n", "expected an integer field \"n\"");
    }
    int n = j["n"].get<int>();
    if (n < 0 || n > 20) {
        throw fail("n", "\"n\" out of range");
    }
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) {
        throw fail("amplitudes", "expected an array field \"amplitudes\"");
    }
    const auto &amps = j["amplitudes"];
    int64_t d = int64_t(1) << n;
    if (int64_t(amps.size()) != d) {
        throw fail("amplitudes", "expected 2^n = " + std::to_string(d) + " amplitudes, got " +
                                     std::to_string(amps.size()));
    }
    StateVector psi(d);
    for (int64_t k = 0; k < d; k++) {
        const auto &a = amps[k];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw fail("amplitudes", "amplitude " + std::to_string(k) + " is not a [re, im] pair");
        }
        psi[k] = cplx(a[0].get<double>(), a[1].get<double>());
    }
    require_normalized(psi, 1e-8);
    return psi;
}

StateVector read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_state_json(ss.str());
}

nlohmann::json state_to_json(const StateVector &psi) {
    nlohmann::json amps = nlohmann::json::array();
    for (int64_t k = 0; k < psi.size(); k++) {
        amps.push_back({psi[k].real(), psi[k].imag()});
    }
    return {{"n", qubits_of(psi)}, {"amplitudes", amps}};
}

void write_state_file(const std::string &path, const StateVector &psi) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << state_to_json(psi).dump(2) << "\n";
}

nlohmann::json rational_json(const Rational &r) {
    return {{"exact", rational_string(r)}, {"value", rational_to_double(r)}};
}

}  // namespace cliff4

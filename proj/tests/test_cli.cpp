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


#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cliff4/fiducial.hpp"
#include "cliff4/io.hpp"
#include "commands.hpp"

namespace cliff4::cli {
namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "cliff4");
    std::vector<char *> argv;
    for (auto &a : args) {
        argv.push_back(a.data());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    CliRun r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

std::string temp_path(const std::string &name) {
    return ::testing::TempDir() + name;
}

TEST(Cli, Tables) {
    auto j = run_json({"tables", "--n", "3"});
    EXPECT_TRUE(j["pass"].get<bool>());
    ASSERT_EQ(j["tables"].size(), 3u);
    EXPECT_EQ(j["tables"][2]["frame_potential_phi4"]["exact"], "30");
    CliRun csv = run({"--format", "csv", "tables", "--n", "2"});
    EXPECT_EQ(csv.code, 0);
    EXPECT_NE(csv.out.find(','), std::string::npos);
    EXPECT_THROW(nlohmann::json::parse(csv.out), nlohmann::json::parse_error);
}

TEST(Cli, CheckNamedAndFile) {
    auto j = run_json({"check", "--named", "psi_T"});
    EXPECT_NEAR(j["report"]["epsilon"].get<double>(), -1.0 / 6, 1e-12);
    EXPECT_FALSE(j["is_4design_fiducial"].get<bool>());

    std::string path = temp_path("zero.json");
    StateVector z = StateVector::Zero(4);
    z[0] = 1;
    write_state_file(path, z);
    auto f = run_json({"check", "--file", path});
    EXPECT_NEAR(f["report"]["epsilon"].get<double>(), 0.75, 1e-12);

    std::ofstream(temp_path("bad.json")) << "{\n  \"n\": 1,\n  \"amplitudes\": [[1, 0], [0, \n}\n";
    CliRun bad = run({"check", "--file", temp_path("bad.json")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line"), std::string::npos);
}

TEST(Cli, StateJsonErrors) {
    EXPECT_THROW(parse_state_json("{\"n\": 1, \"amplitudes\": [[1, 0], [1, 0]]}"), NormalizationError);
    try {
        parse_state_json("{\n\"n\": 2,\n\"amplitudes\": [[1, 0], [0, 0]]\n}");
        FAIL() << "expected a parse error";
    } catch (const StateParseError &e) {
        EXPECT_GE(e.line, 1);
    }
    try {
        parse_state_json("{\n\"n\": 1,\n\"amplitudes\": [[1, 0], [0 0]]\n}");
        FAIL() << "expected a parse error";
    } catch (const StateParseError &e) {
        EXPECT_EQ(e.line, 3);
    }
    StateVector t = named_fiducial("psi_T");
    StateVector back = parse_state_json(state_to_json(t).dump());
    EXPECT_LT((back - t).norm(), 1e-15);
    EXPECT_EQ(rational_json(Rational(1, 3))["exact"], "1/3");
}

TEST(Cli, Construct) {
    auto a = run_json({"construct", "--alg1", "--base", "hoggar", "psi_T", "--n", "5"});
    EXPECT_NEAR(a["quartic_target"].get<double>(), 19.0 / 35, 1e-12);
    EXPECT_LE(std::abs(a["report"]["epsilon"].get<double>()), 1e-9);
    std::string path = temp_path("fid.json");
    auto b = run_json({"construct", "--alg2", "--n", "3", "--state-out", path});
    StateVector s = read_state_file(path);
    EXPECT_EQ(s.size(), 8);
    auto w = run_json({"construct", "--weighted", "--n", "1"});
    EXPECT_TRUE(w["pass"].get<bool>());
    CliRun both = run({"construct", "--alg1", "--alg2", "--n", "2"});
    EXPECT_EQ(both.code, 2);
}

TEST(Cli, MomentsDeterministic) {
    CliRun a = run({"--seed", "7", "moments", "--n", "2", "--samples", "20000"});
    CliRun b = run({"--seed", "7", "--threads", "1", "moments", "--n", "2", "--samples", "20000"});
    ASSERT_EQ(a.code, 0) << a.err;
    auto ja = nlohmann::json::parse(a.out);
    auto jb = nlohmann::json::parse(b.out);
    ja.erase("config");
    jb.erase("config");
    for (auto *j : {&ja, &jb}) {
        if (j->contains("timing")) {
            j->erase("timing");
        }
    }
    EXPECT_EQ(ja, jb);
}

TEST(Cli, SingerAndOrbit) {
    auto s = run_json({"singer", "--n", "1", "--n", "2"});
    EXPECT_TRUE(s["pass"].get<bool>());
    auto o = run_json({"orbit", "--named", "bloch:0,0,1", "--t", "4", "--n", "1"});
    EXPECT_NEAR(o["value"].get<double>(), 5.0 / 24, 1e-12);
    auto mc = run_json({"orbit", "--named", "psi_T", "--t", "4", "--n", "1", "--mc", "--samples", "5000"});
    EXPECT_FALSE(mc["exact"].get<bool>());
}

TEST(Cli, OutputFileAndErrors) {
    std::string path = temp_path("out.json");
    CliRun r = run({"--out", path, "check", "--named", "hoggar"});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    EXPECT_NEAR(j["report"]["epsilon"].get<double>(), -7.0 / 18, 1e-12);
    EXPECT_EQ(run({"check", "--named", "nosuch"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_NE(flatten_csv(nlohmann::json{{"a", {{"b", 1}}}}).find("a.b,1"), std::string::npos);
}

}  // namespace
}  // namespace cliff4::cli

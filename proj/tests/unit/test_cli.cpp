/*
   Copyright 2026 The hlg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "hlg/cli.hpp"

using namespace hlg;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun hlg_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("hlg_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

std::string point_arg(const FieldVector& x) {
    std::string s;
    for (Residue c : x.raw()) s += (s.empty() ? "" : ",") + std::to_string(c);
    return s;
}

}  // namespace

TEST(Cli, KeyspaceMatchesEnumeration) {
    const CliRun r = hlg_cli({"keyspace", "--p", "2", "--d", "1", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.out;
    const io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(j["lower_bound"], 128);
    EXPECT_EQ(j["enumeration"]["pairs"], 128);
    EXPECT_FALSE(j["published_formula_note"].get<std::string>().empty());
}

TEST(Cli, InvalidInputExitCodes) {
    CliRun r = hlg_cli({"keyspace", "--p", "4"});
    EXPECT_EQ(r.code, cli::kInvalid);
    EXPECT_EQ(io::Json::parse(r.out)["error"], "NotPrime");
    r = hlg_cli({"gen-group", "--convention", "sideways"});
    EXPECT_EQ(r.code, cli::kInvalid);
    r = hlg_cli({"gen-group", "--retraction", "index:0"});
    EXPECT_EQ(r.code, cli::kInvalid);
    r = hlg_cli({"no-such-command"});
    EXPECT_EQ(r.code, cli::kInvalid);
    r = hlg_cli({"add"});
    EXPECT_EQ(r.code, cli::kInvalid);
}

TEST_F(CliFiles, GroupCommandsAgreeWithLibrary) {
    ASSERT_EQ(hlg_cli({"gen-group", "--seed", "5", "--out", path("t.json"), "--public", path("g.json")}).code, 0);
    const Trapdoor t = io::trapdoor_from_json(io::read_json_file(path("t.json")));
    const FieldVector a = t.point(10), b = t.point(20);

    for (const char* src : {"--trapdoor", "--public"}) {
        const std::string file = std::string(src) == "--trapdoor" ? path("t.json") : path("g.json");
        CliRun r = hlg_cli({"add", src, file, "--point", point_arg(a), "--point", point_arg(b)});
        ASSERT_EQ(r.code, 0) << r.out;
        EXPECT_EQ(io::Json::parse(r.out)["result"], io::Json(t.point(30).raw()));
        r = hlg_cli({"smul", src, file, "--point", point_arg(a), "--scalar", "4"});
        EXPECT_EQ(io::Json::parse(r.out)["result"], io::Json(t.point(40).raw()));
        r = hlg_cli({"neg", src, file, "--point", point_arg(a)});
        EXPECT_EQ(io::Json::parse(r.out)["result"], io::Json(t.point(1801 - 10).raw()));
    }
    CliRun r = hlg_cli({"dlog", "--trapdoor", path("t.json"), "--point", point_arg(a)});
    EXPECT_EQ(io::Json::parse(r.out)["dlog"], 10);
    r = hlg_cli({"member", "--trapdoor", path("t.json"), "--point", point_arg(a)});
    EXPECT_EQ(io::Json::parse(r.out)["member"], true);
    r = hlg_cli({"dlog", "--trapdoor", path("t.json"), "--point", point_arg(a), "--point", point_arg(t.identity())});
    EXPECT_EQ(r.code, cli::kInvalid);
    EXPECT_EQ(io::Json::parse(r.out)["error"], "IdentityBase");
}

TEST_F(CliFiles, DeterministicOutputFiles) {
    for (int i = 0; i < 2; ++i) {
        const std::string s = std::to_string(i);
        ASSERT_EQ(hlg_cli({"gen-group", "--seed", "9", "--n", "3", "--d", "2", "--out", path("t" + s)}).code, 0);
        ASSERT_EQ(hlg_cli({"invert", "--trapdoor", path("t0"), "--seed", "3", "--out", path("i" + s)}).code, 0);
        ASSERT_EQ(hlg_cli({"pair-gen", "--seed", "2", "--n", "2", "--out", path("p" + s)}).code, 0);
    }
    for (const char* f : {"t", "i", "p"}) {
        const std::string a = io::dump(io::read_json_file(path(std::string(f) + "0")));
        const std::string b = io::dump(io::read_json_file(path(std::string(f) + "1")));
        EXPECT_EQ(a, b) << f;
    }
    EXPECT_NE(io::dump(io::read_json_file(path("t0"))), hlg_cli({"gen-group", "--seed", "10"}).out);
}

TEST_F(CliFiles, InvertRecoversPlantedPoint) {
    ASSERT_EQ(hlg_cli({"gen-group", "--seed", "8", "--out", path("t.json")}).code, 0);
    for (const char* oracle : {"exact", "interpolate"}) {
        const CliRun r = hlg_cli({"invert", "--trapdoor", path("t.json"), "--seed", "4", "--oracle", oracle});
        ASSERT_EQ(r.code, 0) << r.out;
        const io::Json j = io::Json::parse(r.out);
        EXPECT_EQ(j["point"], j["planted"]) << oracle;
        EXPECT_EQ(j["forward_check"], true);
    }
    const CliRun bad = hlg_cli({"invert", "--trapdoor", path("t.json"), "--tstar", "1"});
    EXPECT_EQ(bad.code, cli::kInvalid);
}

TEST_F(CliFiles, BudgetExitCode) {
    ASSERT_EQ(hlg_cli({"pair-gen", "--seed", "1", "--n", "3", "--d", "2", "--out", path("p.json")}).code, 0);
    const CliRun r = hlg_cli({"pair-expand", "--pairing", path("p.json"), "--max-terms", "1000"});
    EXPECT_EQ(r.code, cli::kBudget);
    const io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(j["error"], "TermBudgetExceeded");
    EXPECT_TRUE(j.contains("partial_terms"));
}

TEST_F(CliFiles, PairingCommands) {
    ASSERT_EQ(hlg_cli({"pair-gen", "--seed", "3", "--n", "2", "--k", "2", "--out", path("p.json")}).code, 0);
    const MultilinearPairing pr = io::pairing_from_json(io::read_json_file(path("p.json")));
    const FieldVector a = pr.source().point(3), b = pr.source().point(5);
    const CliRun r = hlg_cli({"pair-eval", "--pairing", path("p.json"), "--point", point_arg(a), "--point", point_arg(b)});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(io::Json::parse(r.out)["result"], io::Json(pr.target().point(15).raw()));
    EXPECT_EQ(hlg_cli({"pair-check", "--pairing", path("p.json"), "--trials", "50"}).code, 0);
    EXPECT_EQ(hlg_cli({"pair-expand", "--pairing", path("p.json")}).code, 0);
}

TEST_F(CliFiles, Implicitize) {
    ASSERT_EQ(hlg_cli({"gen-group", "--seed", "6", "--n", "2", "--d", "2", "--out", path("t.json")}).code, 0);
    const Trapdoor t = io::trapdoor_from_json(io::read_json_file(path("t.json")));
    const CliRun r = hlg_cli({"implicitize", "--trapdoor", path("t.json")});
    ASSERT_EQ(r.code, 0) << r.out;
    const IdealBasis b = io::basis_from_json(io::Json::parse(r.out)["basis"]);
    ASSERT_FALSE(b.generators.empty());
    for (Residue s : {0u, 1u, 77u, 1000u}) {
        const FieldVector x = t.point(s);
        for (const auto& g : b.generators) EXPECT_EQ(g.evaluate(x), 0u);
    }
}

TEST(Cli, WorkedExamplesReport) {
    CliRun r = hlg_cli({"verify-example1", "--convention", "both"});
    EXPECT_EQ(r.code, 0) << r.out;
    io::Json j = io::Json::parse(r.out);
    EXPECT_EQ(j["reports"].size(), 2u);
    EXPECT_EQ(j["reports"][0]["z3_structural"], true);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    r = hlg_cli({"verify-example2", "--convention", "lambda1-first"});
    EXPECT_EQ(r.code, 0) << r.out;
    j = io::Json::parse(r.out);
    EXPECT_EQ(j["reports"].size(), 1u);
}

TEST(Cli, Selftest) {
    const CliRun r = hlg_cli({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(io::Json::parse(r.out)["ok"], true);
}

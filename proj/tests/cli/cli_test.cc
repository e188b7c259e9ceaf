// Copyright 2026 The mmcodes Authors
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

#include "cli/commands.h"

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli/bundle.h"
#include "cli/config.h"
#include "mmcodes/errors.h"
#include "mmcodes/matrix_io.h"

namespace fs = std::filesystem;
using namespace mmcodes;
using namespace mmcodes::cli;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "mmcodes");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &rel) {
    return std::string(MMCODES_FIXTURES_DIR) + "/" + rel;
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("mmcodes_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    std::string write(const std::string &name, const std::string &text) const {
        write_text_file(path(name), text);
        return path(name);
    }

    fs::path dir_;
};

const char *kT2Config = R"(name: bicycle-t2
t: 2
orders: [3, 3]
generators: ["1 + x + y", "1 + xy"]
)";

}  // namespace

TEST_F(CliTest, build_row1_manifest) {
    Result r = invoke({"build", fixture("table2/row01.yaml"), "--out", path("b")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto m = nlohmann::json::parse(r.out);
    EXPECT_EQ(m["schema_version"], 1);
    EXPECT_EQ(m["n"], 96);
    EXPECT_EQ(m["matrices"]["P_X"]["rows"], 64);
    EXPECT_EQ(m["matrices"]["P_X"]["cols"], 96);
    EXPECT_EQ(m["metachecks"], "present");
    EXPECT_EQ(m["checks"]["px_pz_orthogonal"], true);
    for (const char *f : {"P_X.mtx", "P_X.alist", "P_Z.mtx", "M_X.alist", "M_Z.mtx", "manifest.json"}) {
        EXPECT_TRUE(fs::exists(path("b") + "/" + f)) << f;
    }
    std::string mtx = read_text_file(path("b") + "/P_X.mtx");
    EXPECT_EQ(m["matrices"]["P_X"]["sha256"], sha256_hex(mtx));
    BitMatrix px = from_alist(read_text_file(path("b") + "/P_X.alist"));
    EXPECT_EQ(px, from_mtx(mtx));
}

TEST_F(CliTest, build_t2_notes_absent_metachecks) {
    Result r = invoke({"build", write("t2.yaml", kT2Config), "--out", path("b"), "--format", "alist"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto m = nlohmann::json::parse(r.out);
    EXPECT_NE(m["metachecks"].get<std::string>().find("absent"), std::string::npos);
    EXPECT_FALSE(m["matrices"].contains("M_X"));
    EXPECT_FALSE(fs::exists(path("b") + "/P_X.mtx"));
}

TEST_F(CliTest, sha256_known_vector) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_F(CliTest, malformed_polynomial_reports_offset) {
    std::string cfg = write("bad.yaml", "t: 2\norders: [3, 3]\ngenerators: [\"1 + x\", \"1 + x^^2\"]\n");
    Result r = invoke({"build", cfg, "--out", path("b")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("generator 2"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("at byte 6"), std::string::npos) << r.err;
}

TEST_F(CliTest, config_errors_have_locations) {
    Result r = invoke({"params", write("a.yaml", "t: 2\norders: [3, 3]\ngenerators: [\"1\", \"x\"]\ncolour: red\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("a.yaml:4:"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("unknown key 'colour'"), std::string::npos) << r.err;

    r = invoke({"params", write("b.yaml", "t: 3\norders: [3, 3]\ngenerators: [\"1\", \"x\"]\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("t=3 but 2 generators"), std::string::npos) << r.err;

    r = invoke({"params", write("c.yaml", "t: 2\norders: [3, 3\n")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("c.yaml:"), std::string::npos) << r.err;
}

TEST_F(CliTest, usage_errors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"params"}).code, 2);
    EXPECT_EQ(invoke({"distance", fixture("table2/row01.yaml"), "--type", "y"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
    EXPECT_EQ(invoke({"params", fixture("families/mm648.yaml"), "--max-t", "3"}).code, 2);
}

TEST_F(CliTest, params_bundle_equals_params_config) {
    ASSERT_EQ(invoke({"build", fixture("table2/row01.yaml"), "--out", path("b")}).code, 0);
    Result direct = invoke({"params", fixture("table2/row01.yaml"), "--seed", "3"});
    Result via = invoke({"params", path("b"), "--seed", "3"});
    ASSERT_EQ(direct.code, 0) << direct.err;
    ASSERT_EQ(via.code, 0) << via.err;
    EXPECT_EQ(direct.out, via.out);
}

TEST_F(CliTest, params_is_deterministic_and_records_settings) {
    std::vector<std::string> args = {"params", fixture("table2/row01.yaml"), "--seed", "11", "--workers", "3",
                                     "--iterations", "100"};
    Result a = invoke(args);
    Result b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["settings"]["seed"], 11);
    EXPECT_EQ(j["settings"]["workers"], 3);
    EXPECT_EQ(j["k"], 12);
    EXPECT_EQ(j["d_x"]["status"], "exact");
}

TEST_F(CliTest, params_writes_out_file) {
    Result r = invoke({"params", fixture("families/bga16.yaml"), "--out", path("r.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    auto j = nlohmann::json::parse(read_text_file(path("r.json")));
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["d_z"]["upper"], 4);
}

TEST_F(CliTest, budget_exit_code) {
    ::setenv("MMCODES_BUDGET", "100", 1);
    Result r = invoke({"distance", fixture("table2/row01.yaml")});
    ::unsetenv("MMCODES_BUDGET");
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--w-exhaustive"), std::string::npos) << r.err;
}

TEST_F(CliTest, verify_and_tamper) {
    ASSERT_EQ(invoke({"build", fixture("table2/row01.yaml"), "--out", path("b")}).code, 0);
    Result ok = invoke({"verify", path("b")});
    EXPECT_EQ(ok.code, 0) << ok.err;
    EXPECT_EQ(nlohmann::json::parse(ok.out)["ok"], true);

    Result cfg = invoke({"verify", fixture("table2/row01.yaml")});
    EXPECT_EQ(cfg.code, 0);
    EXPECT_EQ(nlohmann::json::parse(cfg.out)["checks"]["boundary_squares_zero"], true);

    BitMatrix px = from_mtx(read_text_file(path("b") + "/P_X.mtx"));
    px.flip(0, 0);
    write_text_file(path("b") + "/P_X.mtx", to_mtx(px));
    Result bad = invoke({"verify", path("b")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("SHA-256"), std::string::npos) << bad.err;
}

TEST_F(CliTest, ssdist_and_missing_metachecks) {
    Result r = invoke({"ssdist", fixture("table2/row01.yaml")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["d_ss_x"]["upper"], 2);
    EXPECT_EQ(j["d_ss_z"]["status"], "exact");

    std::string t2 = write("t2.yaml", kT2Config);
    Result missing = invoke({"ssdist", t2});
    EXPECT_EQ(missing.code, 1);
    EXPECT_NE(missing.err.find("metacheck"), std::string::npos);

    std::string t3 = write("t3.yaml", "t: 3\norders: [3, 3]\ngenerators: [\"1 + x\", \"1 + y\", \"1 + xy\"]\n");
    Result partial = invoke({"ssdist", t3});
    ASSERT_EQ(partial.code, 0) << partial.err;
    auto pj = nlohmann::json::parse(partial.out);
    EXPECT_TRUE(pj["d_ss_x"].is_null());
    EXPECT_FALSE(pj["d_ss_z"].is_null());
    EXPECT_EQ(invoke({"ssdist", t3, "--type", "x"}).code, 1);
}

TEST_F(CliTest, distance_and_confine) {
    Result d = invoke({"distance", fixture("families/toric4d.yaml"), "--type", "z"});
    ASSERT_EQ(d.code, 0) << d.err;
    auto dj = nlohmann::json::parse(d.out);
    EXPECT_EQ(dj["k"], 6);
    EXPECT_EQ(dj["d_z"]["upper"], 4);
    EXPECT_FALSE(dj.contains("d_x"));

    Result c = invoke({"confine", fixture("families/toric4d.yaml"), "-w", "3"});
    ASSERT_EQ(c.code, 0) << c.err;
    auto cj = nlohmann::json::parse(c.out);
    EXPECT_EQ(cj["confinement_x"]["values"], nlohmann::json({4, 4, 4}));
    EXPECT_EQ(cj["confinement_z"]["values"], nlohmann::json({4, 4, 4}));
    EXPECT_EQ(cj["d_s"]["value"], 4);
}

TEST_F(CliTest, export_formats) {
    ASSERT_EQ(invoke({"build", fixture("families/bga16.yaml"), "--out", path("b"), "--format", "mtx"}).code, 0);
    Result a = invoke({"export", path("b"), "--format", "alist", "--out", path("e")});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(from_alist(read_text_file(path("e") + "/P_X.alist")), from_mtx(read_text_file(path("b") + "/P_X.mtx")));
    Result j = invoke({"export", path("b"), "--format", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_EQ(nlohmann::json::parse(j.out)["n"], 16);
    EXPECT_EQ(invoke({"export", path("b"), "--format", "mtx"}).code, 2);
    EXPECT_EQ(invoke({"export", path("b"), "--format", "csv", "--out", path("x")}).code, 2);
}

TEST_F(CliTest, table2_rows) {
    Result r = invoke({"table2", "1", "4"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("match"), std::string::npos);
    Result j = invoke({"table2", "1", "--format", "json"});
    ASSERT_EQ(j.code, 0);
    auto jj = nlohmann::json::parse(j.out);
    EXPECT_EQ(jj["rows"][0]["status"], "match");
    EXPECT_EQ(jj["rows"][0]["computed"]["k"], 12);
    EXPECT_EQ(invoke({"table2", "99"}).code, 2);
}

TEST_F(CliTest, table2_mismatch_exits_nonzero) {
    fs::create_directories(path("fx"));
    std::string text = read_text_file(fixture("table2/row01.yaml"));
    text.replace(text.find("k: 12"), 5, "k: 13");
    write("fx/row01.yaml", text);
    Result r = invoke({"table2", "--fixtures", path("fx")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("mismatch"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("k=12 (reference 13)"), std::string::npos) << r.out;
}

TEST_F(CliTest, search_jsonl) {
    std::string cfg = write("s.yaml", R"(t: 3
orders: [[3, 3], [2, 4]]
term_range: [2, 3]
distance_budget: {w_exhaustive: 2, iterations: 20}
max_candidates: 25
seed: 4
)");
    Result a = invoke({"search", cfg, "--workers", "2"});
    ASSERT_EQ(a.code, 0) << a.err;
    Result b = invoke({"search", cfg, "--workers", "2"});
    EXPECT_EQ(a.out, b.out);
    std::istringstream in(a.out);
    std::string line;
    std::string last;
    while (std::getline(in, line)) {
        last = line;
    }
    auto footer = nlohmann::json::parse(last);
    EXPECT_EQ(footer["record"], "footer");
    EXPECT_EQ(footer["drawn"], 25);
    EXPECT_EQ(footer["workers"], 2);

    Result c = invoke({"search", cfg, "--max-candidates", "5", "--out", path("o.jsonl")});
    ASSERT_EQ(c.code, 0);
    EXPECT_NE(read_text_file(path("o.jsonl")).find("\"drawn\":5"), std::string::npos);
}

TEST(CliConfig, search_config_parsing) {
    SearchConfig c = parse_search_config(R"(t: 4
orders: [2, 2, 2, 2]
variables: [w, x, y, z]
generators: ["1 + v_a v_b"]
require_k_min: 4
confinement_w_max: 2
)");
    EXPECT_EQ(c.orders.size(), 1u);
    EXPECT_EQ(c.structured_families, std::vector<std::string>{"1 + v_a v_b"});
    EXPECT_EQ(c.require_k_min, 4u);
    EXPECT_EQ(c.confinement_w, 2u);
    EXPECT_THROW(parse_search_config("t: 1\norders: [2]\n"), ParseError);
    EXPECT_THROW(parse_search_config("t: 2\norders: [2]\nterm_range: [3]\n"), ParseError);
}

TEST(CliConfig, build_config_variables) {
    BuildConfig c = parse_build_config("t: 2\norders: [4, 2]\nvariables: [x, s]\ngenerators: [\"1 + x\", \"s\"]\n");
    EXPECT_EQ(c.names().names(), (std::vector<std::string>{"x", "s"}));
    EXPECT_THROW(parse_build_config("t: 2\norders: [4]\nvariables: [x, s]\ngenerators: [\"1\", \"x\"]\n"),
                 ParseError);
    EXPECT_THROW(parse_build_config("t: 2\norders: [4, -1]\ngenerators: [\"1\", \"x\"]\n"), ParseError);
}

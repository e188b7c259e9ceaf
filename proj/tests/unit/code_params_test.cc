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

#include "mmcodes/code_params.h"

#include <gtest/gtest.h>

#include "generators.h"
#include "mmcodes/errors.h"
#include "mmcodes/gf2.h"
#include "mmcodes/report_json.h"
#include "oracles.h"

using namespace mmcodes;

namespace {

MCssCode build(const std::vector<uint32_t> &orders, const std::vector<std::string> &texts) {
    GroupSpec spec(orders);
    std::vector<RingElem> gens;
    for (const auto &t : texts) {
        gens.push_back(parse_poly(t, spec));
    }
    return build_mm_code(gens, spec, std::nullopt, {"test-code", "unit"});
}

const std::vector<std::string> kRow1 = {"1 + wx", "1 + xy", "1 + yz", "1 + wz"};

}  // namespace

TEST(CodeParams, row1_parameters) {
    MCssCode code = build({2, 2, 2, 2}, kRow1);
    EXPECT_EQ(logical_count(code), 12u);
    CheckWeightStats w = check_weight_stats(code);
    EXPECT_EQ(w.w_max, 6u);
    EXPECT_EQ(w.w_med, 6.0);
    AnalysisOptions opts;
    opts.single_shot = false;
    CodeReport r = analyze(code, opts);
    EXPECT_EQ(r.n, 96u);
    EXPECT_EQ(r.k, 12u);
    EXPECT_TRUE(r.d_x.exact());
    EXPECT_TRUE(r.d_z.exact());
    EXPECT_EQ(*r.d_x.upper, 4u);
    EXPECT_EQ(*r.d_z.upper, 4u);
    EXPECT_EQ(r.name, "test-code");
    EXPECT_EQ(r.generators.size(), 4u);
}

TEST(CodeParams, median_of_even_count_averages_middle_pair) {
    MCssCode code;
    code.p_x = BitMatrix::from_dense({{1, 1, 0, 0}, {1, 1, 1, 0}});
    code.p_z = BitMatrix::from_dense({{1, 0, 0, 0}, {1, 1, 1, 1}});
    code.n = 4;
    CheckWeightStats w = check_weight_stats(code);
    EXPECT_EQ(w.w_med_x, 2.5);
    EXPECT_EQ(w.w_med_z, 2.5);
    EXPECT_EQ(w.w_med, 2.5);
    EXPECT_EQ(w.w_max, 4u);
}

TEST(CodeParams, zero_logicals) {
    MCssCode code = build({3}, {"1", "x"});
    EXPECT_EQ(logical_count(code), 0u);
    AnalysisOptions opts;
    CodeReport r = analyze(code, opts);
    EXPECT_EQ(r.d_x.lower, code.n + 1);
    EXPECT_FALSE(r.d_x.upper);
}

TEST(CodeParams, missing_metacheck) {
    MCssCode code = build({3, 3}, {"1 + x", "1 + y"});
    EXPECT_THROW(single_shot_distance(code, PauliType::X, ExhaustiveOptions{}, RandomizedOptions{}),
                 MissingMetacheckError);
    AnalysisOptions opts;
    CodeReport r = analyze(code, opts);
    EXPECT_FALSE(r.d_ss_x);
    EXPECT_FALSE(r.d_ss_z);
}

TEST(CodeParams, hook_stops_early) {
    MCssCode code = build({2, 2, 2, 2}, kRow1);
    std::vector<std::string> stages;
    CodeReport r = analyze(code, AnalysisOptions{}, [&](std::string_view stage, const CodeReport &) {
        stages.emplace_back(stage);
        return false;
    });
    EXPECT_EQ(stages, (std::vector<std::string>{"k"}));
    EXPECT_EQ(r.k, 12u);
    EXPECT_FALSE(r.d_x.upper);
}

TEST(SingleShotOracle, matches_brute_force) {
    std::mt19937_64 rng(61);
    int compared = 0;
    for (int trial = 0; trial < 200 && compared < 40; trial++) {
        GroupSpec spec = gen::spec(rng, 2, 3);
        size_t t = gen::uniform(rng, 3, 4);
        std::vector<RingElem> gens;
        for (size_t i = 0; i < t; i++) {
            gens.push_back(gen::poly(spec, rng, 2));
        }
        MCssCode code = build_mm_code(gens, spec);
        for (PauliType type : {PauliType::X, PauliType::Z}) {
            const auto &meta = type == PauliType::X ? code.m_x : code.m_z;
            const BitMatrix &p = type == PauliType::X ? code.p_x : code.p_z;
            if (!meta || p.rows() > 18) {
                continue;
            }
            auto want = oracle::single_shot(oracle::to_dense(*meta), oracle::to_dense(p), p.cols());
            ExhaustiveOptions ex;
            ex.w_max = p.rows();
            RandomizedOptions r;
            r.iterations = 50;
            DistanceBound got = single_shot_distance(code, type, ex, r);
            if (!want) {
                EXPECT_FALSE(got.upper);
            } else {
                ASSERT_TRUE(got.exact()) << "trial " << trial;
                EXPECT_EQ(*got.upper, *want);
            }
            compared++;
        }
    }
    EXPECT_GE(compared, 40);
}

TEST(CodeParams, row1_single_shot_and_confinement) {
    MCssCode code = build({2, 2, 2, 2}, kRow1);
    AnalysisOptions opts;
    opts.confinement_w = 2;
    CodeReport r = analyze(code, opts);
    ASSERT_TRUE(r.d_ss_x && r.d_ss_z);
    EXPECT_TRUE(r.d_ss_x->exact());
    EXPECT_EQ(*r.d_ss_x->upper, 2u);
    ASSERT_TRUE(r.confinement_x && r.confinement_z);
    ASSERT_TRUE(r.d_s);
    EXPECT_EQ(*r.d_s, 4u);
    EXPECT_TRUE(r.d_s_exact);
}

TEST(ReportJson, stable_keys_and_status) {
    MCssCode code = build({2, 2, 2, 2}, kRow1);
    AnalysisOptions opts;
    opts.single_shot = false;
    auto j = report_to_json(analyze(code, opts));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) {
        keys.push_back(it.key());
    }
    EXPECT_EQ(keys.front(), "schema_version");
    EXPECT_EQ(j["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(j["d_x"]["status"], "exact");
    EXPECT_EQ(j["d_ss_x"], nullptr);
    EXPECT_FALSE(j.contains("timing_seconds"));
    EXPECT_EQ(j["check_weights"]["w_med"].dump(), "6");
    opts.timing = true;
    EXPECT_TRUE(report_to_json(analyze(code, opts)).contains("timing_seconds"));

    DistanceBound lower_only;
    lower_only.lower = 5;
    EXPECT_EQ(bound_to_json(lower_only)["status"], "lower_bound");
    EXPECT_EQ(number_to_json(2.5).dump(), "2.5");
}

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

#include "mmcodes/search.h"

#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace mmcodes;

namespace {

SearchConfig small_config() {
    SearchConfig c;
    c.t = 3;
    c.orders = {GroupSpec({3, 3}), GroupSpec({2, 4})};
    c.term_min = 2;
    c.term_max = 3;
    c.w_exhaustive = 2;
    c.iterations = 20;
    c.max_candidates = 40;
    c.seed = 5;
    return c;
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST(SearchConfig, validation) {
    SearchConfig c = small_config();
    EXPECT_NO_THROW(c.validate());
    c.t = 1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.term_min = 4;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.orders.clear();
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config();
    c.q_override = 3;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(Search, sample_respects_term_range) {
    SearchConfig c = small_config();
    Rng rng(1);
    for (int i = 0; i < 50; i++) {
        auto gens = sample_generators(c, c.orders[0], rng);
        ASSERT_EQ(gens.size(), 3u);
        for (const auto &g : gens) {
            EXPECT_GE(g.weight(), 2u);
            EXPECT_LE(g.weight(), 3u);
        }
    }
}

TEST(Search, templates_bind_distinct_variables) {
    SearchConfig c = small_config();
    c.t = 2;
    c.structured_families = {"(1 + v_a)(1 + v_b)"};
    GroupSpec spec({3, 3});
    Rng rng(2);
    for (int i = 0; i < 20; i++) {
        auto gens = sample_generators(c, spec, rng);
        for (const auto &g : gens) {
            EXPECT_EQ(g.weight(), 4u);
        }
    }
    c.structured_families = {"v_a + v_b + v_c"};
    EXPECT_THROW(sample_generators(c, spec, rng), std::invalid_argument);
}

TEST(Search, canonical_key_ignores_generator_order) {
    GroupSpec spec({3, 3});
    std::vector<RingElem> a = {parse_poly("1 + x", spec), parse_poly("y", spec)};
    std::vector<RingElem> b = {a[1], a[0]};
    EXPECT_EQ(canonical_key(spec, a), canonical_key(spec, b));
}

TEST(Search, rejection_stages) {
    SearchConfig c = small_config();
    GroupSpec spec({3, 3});
    // Every generator invertible: the complex is exact and k = 0.
    std::vector<RingElem> trivial = {parse_poly("1", spec), parse_poly("x", spec), parse_poly("y", spec)};
    Evaluation ev = evaluate_candidate(trivial, spec, c);
    ASSERT_TRUE(ev.rejection);
    EXPECT_EQ(ev.rejection->stage, 2);
    EXPECT_FALSE(ev.report);
}

TEST(Search, output_independent_of_worker_count) {
    SearchConfig c = small_config();
    std::ostringstream one;
    SearchStats s1 = run_search_jsonl(c, one);
    c.workers = 4;
    std::ostringstream four;
    SearchStats s4 = run_search_jsonl(c, four);
    auto l1 = lines(one.str());
    auto l4 = lines(four.str());
    ASSERT_EQ(l1.size(), l4.size());
    // Everything but the footer's worker count is identical.
    for (size_t i = 0; i + 1 < l1.size(); i++) {
        EXPECT_EQ(l1[i], l4[i]);
    }
    EXPECT_EQ(s1.accepted, s4.accepted);
    EXPECT_EQ(s1.drawn, 40u);

    auto footer = nlohmann::json::parse(l1.back());
    EXPECT_EQ(footer["record"], "footer");
    EXPECT_EQ(footer["drawn"], 40);
    size_t rejected = 0;
    for (int s = 1; s <= kSearchStages; s++) {
        rejected += footer["rejected_by_stage"][std::to_string(s)].get<size_t>();
    }
    EXPECT_EQ(footer["evaluated"].get<size_t>(), footer["accepted"].get<size_t>() + rejected);
    EXPECT_EQ(footer["drawn"].get<size_t>(), footer["evaluated"].get<size_t>() + footer["duplicates"].get<size_t>());
    for (size_t i = 0; i + 1 < l1.size(); i++) {
        auto rec = nlohmann::json::parse(l1[i]);
        EXPECT_GE(rec["k"].get<size_t>(), 1u);
        EXPECT_EQ(rec["name"].get<std::string>().rfind("candidate-", 0), 0u);
    }
}

TEST(Search, finds_row1_family_with_pinned_templates) {
    SearchConfig c;
    c.t = 4;
    c.orders = {GroupSpec({2, 2, 2, 2})};
    c.structured_families = {"1 + v_a v_b"};
    c.w_exhaustive = 3;
    c.iterations = 50;
    c.max_candidates = 30;
    c.seed = 1;
    size_t best_k = 0;
    run_search(c, [&](const CodeReport &r) { best_k = std::max(best_k, r.k); });
    EXPECT_GE(best_k, 6u);
}

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

#include "mmcodes/enumeration.h"

#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

using namespace mmcodes;

TEST(Binomial, small_values) {
    EXPECT_EQ(binomial(0, 0), 1u);
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(5, 6), 0u);
    EXPECT_EQ(binomial(96, 4), 3321960u);
    EXPECT_EQ(binomial(64, 32), 1832624140942590534ull);
}

TEST(Binomial, saturates) {
    EXPECT_EQ(binomial(1000, 500), UINT64_MAX);
    EXPECT_EQ(binomial_sum(1000, 500), UINT64_MAX);
}

TEST(Binomial, sum) {
    EXPECT_EQ(binomial_sum(96, 4), 1u + 96 + 4560 + 142880 + 3321960);
    EXPECT_EQ(binomial_sum(10, 10), 1024u);
}

TEST(Budget, environment_override) {
    ::setenv("MMCODES_BUDGET", "12345", 1);
    EXPECT_EQ(enumeration_budget(), 12345u);
    ::unsetenv("MMCODES_BUDGET");
    EXPECT_EQ(enumeration_budget(), kDefaultEnumerationBudget);
}

TEST(Rng, deterministic_streams) {
    Rng a(derive_seed(7, 3));
    Rng b(derive_seed(7, 3));
    Rng c(derive_seed(7, 4));
    EXPECT_EQ(a.next(), b.next());
    EXPECT_NE(Rng(derive_seed(7, 3)).next(), c.next());
    EXPECT_NE(derive_seed(0, 0), derive_seed(0, 1));
    EXPECT_NE(mix64(1), mix64(2));
}

TEST(Rng, below_covers_range) {
    Rng r(1);
    std::set<uint64_t> seen;
    for (int i = 0; i < 2000; i++) {
        uint64_t v = r.below(7);
        ASSERT_LT(v, 7u);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, shuffle_is_permutation) {
    Rng r(2);
    std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    r.shuffle(v);
    std::set<int> s(v.begin(), v.end());
    EXPECT_EQ(s.size(), 10u);
}

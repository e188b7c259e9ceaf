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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <thread>

namespace mmcodes {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    uint64_t result = 1;
    for (uint64_t i = 1; i <= k; i++) {
        // result * (n-k+i) is divisible by i; split the division to avoid overflow.
        uint64_t g = std::gcd(result, i);
        uint64_t factor = (n - k + i) / (i / g);
        if (__builtin_mul_overflow(result / g, factor, &result)) {
            return UINT64_MAX;
        }
    }
    return result;
}

uint64_t binomial_sum(uint64_t n, uint64_t w) {
    uint64_t total = 0;
    for (uint64_t j = 0; j <= std::min(n, w); j++) {
        uint64_t c = binomial(n, j);
        if (c > UINT64_MAX - total) {
            return UINT64_MAX;
        }
        total += c;
    }
    return total;
}

uint64_t enumeration_budget() {
    const char *env = std::getenv("MMCODES_BUDGET");
    if (env != nullptr) {
        uint64_t value = 0;
        const char *end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end && value > 0) {
            return value;
        }
    }
    return kDefaultEnumerationBudget;
}

size_t default_workers() {
    return std::max<size_t>(1, std::thread::hardware_concurrency());
}

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

uint64_t Rng::below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    while (true) {
        uint64_t v = next();
        if (v < limit) {
            return v % bound;
        }
    }
}

}  // namespace mmcodes

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

#ifndef MMCODES_ENUMERATION_H
#define MMCODES_ENUMERATION_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace mmcodes {

/// Default cap on the number of vectors an exhaustive enumeration may visit.
inline constexpr uint64_t kDefaultEnumerationBudget = 2'000'000'000ULL;

/// C(n, k), saturating at UINT64_MAX.
uint64_t binomial(uint64_t n, uint64_t k);

/// Sum of C(n, j) for j in [0, w], saturating at UINT64_MAX.
uint64_t binomial_sum(uint64_t n, uint64_t w);

/// Enumeration budget: MMCODES_BUDGET if set to a positive integer, else the default.
uint64_t enumeration_budget();

/// Worker count to use when the caller passes 0.
size_t default_workers();

/// SplitMix64 finalizer. Used to derive independent seeds.
uint64_t mix64(uint64_t x);

/// Seed for stream `index` derived from a user seed.
uint64_t derive_seed(uint64_t seed, uint64_t index);

/// mt19937_64 with integer sampling that does not depend on the standard
/// library's distribution implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }
    /// Uniform integer in [0, bound). bound must be positive.
    uint64_t below(uint64_t bound);

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace mmcodes

#endif

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

#ifndef MMCODES_DISTANCE_H
#define MMCODES_DISTANCE_H

#include <cstddef>
#include <cstdint>
#include <optional>

#include "mmcodes/bit_matrix.h"

namespace mmcodes {

/// Bounds on min{|v| : check v = 0, v not in rowspace(trivial)}.
struct DistanceBound {
    /// Certified: nothing qualifying has weight below this.
    size_t lower = 1;
    /// Weight of the best witness found, if any.
    std::optional<size_t> upper;
    std::optional<BitVector> witness;

    bool exact() const { return upper.has_value() && *upper == lower; }
};

/// Tightest bound consistent with both inputs. The witness follows the upper bound.
DistanceBound combine(const DistanceBound &a, const DistanceBound &b);

struct ExhaustiveOptions {
    size_t w_max = 4;
    size_t workers = 1;
    /// Refuse when sum_{j<=w_max} C(n, j) exceeds this. 0 means enumeration_budget().
    uint64_t budget = 0;
};

/// Enumerates supports by increasing weight and lexicographic order, stopping
/// at the first weight with a qualifying vector. The witness is the
/// lexicographically smallest support of that weight. Throws BudgetError
/// when the enumeration would exceed the budget and DimensionError when
/// the two matrices disagree on the number of columns.
DistanceBound min_weight_exhaustive(const BitMatrix &check, const BitMatrix &trivial, const ExhaustiveOptions &opts);

struct RandomizedOptions {
    size_t iterations = 1000;
    uint64_t seed = 0;
    size_t workers = 1;
    /// A worker stops once its own best weight is at most this.
    std::optional<size_t> stop_at;
};

/// Information-set sampling. Each iteration permutes columns at random,
/// brings `check` to reduced echelon form, and tries every kernel basis
/// vector of the resulting systematic form plus every sum of two of them.
/// Returns an upper bound only (lower = 1). Deterministic for fixed
/// (seed, workers).
DistanceBound min_weight_randomized(const BitMatrix &check, const BitMatrix &trivial, const RandomizedOptions &opts);

}  // namespace mmcodes

#endif

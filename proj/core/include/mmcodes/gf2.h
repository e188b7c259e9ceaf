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

#ifndef MMCODES_GF2_H
#define MMCODES_GF2_H

#include <cstddef>
#include <span>
#include <vector>

#include "mmcodes/bit_matrix.h"

namespace mmcodes {

/// Reduced row-echelon form of a matrix together with its pivot columns.
/// Rows `[0, rank)` are the nonzero rows; row i has its leading one in
/// column `pivot_cols[i]` and every other row is zero in that column.
struct RrefCache {
    BitMatrix rref;
    std::vector<size_t> pivot_cols;
    size_t rank = 0;
};

/// Product a·b over GF(2). Throws DimensionError unless a.cols() == b.rows().
BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b);

BitMatrix transpose(const BitMatrix &a);

/// Gauss-Jordan elimination.
RrefCache rref(BitMatrix a);

size_t rank(const BitMatrix &a);

/// Rows form a basis of {v : a v = 0}; there are a.cols() - rank(a) of them.
BitMatrix kernel_basis(const BitMatrix &a);
BitMatrix kernel_basis(const RrefCache &cache);

/// True iff `v` lies in the row space captured by `cache`.
bool in_rowspace(const RrefCache &cache, const BitVector &v);

/// Same test on raw words; `scratch` is overwritten (must be words_per_row long).
bool in_rowspace(const RrefCache &cache, std::span<const uint64_t> v, std::span<uint64_t> scratch);

/// Stacks `top` above `bottom`.
BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom);

}  // namespace mmcodes

#endif

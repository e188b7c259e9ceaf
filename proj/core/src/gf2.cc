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

#include "mmcodes/gf2.h"

#include <algorithm>
#include <string>

#include "mmcodes/errors.h"

namespace mmcodes {

namespace {

std::string shape(const BitMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

BitMatrix mat_mul(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        auto dst = out.row(r);
        for (size_t k : a.row_support(r)) {
            xor_words(dst, b.row(k));
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix &a) {
    BitMatrix out(a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c : a.row_support(r)) {
            out.set(c, r);
        }
    }
    return out;
}

RrefCache rref(BitMatrix a) {
    RrefCache cache;
    size_t rows = a.rows();
    size_t stride = a.words_per_row();
    size_t rank = 0;
    for (size_t c = 0; c < a.cols() && rank < rows; c++) {
        size_t word = c / kWordBits;
        uint64_t bit = uint64_t{1} << (c % kWordBits);
        size_t pivot = rank;
        while (pivot < rows && !(a.row(pivot)[word] & bit)) {
            pivot++;
        }
        if (pivot == rows) {
            continue;
        }
        a.swap_rows(rank, pivot);
        // Rows at or below `rank` are zero left of column c, so only the
        // words from `word` onward need to be touched.
        std::span<const uint64_t> prow = a.row(rank).subspan(word);
        for (size_t r = 0; r < rows; r++) {
            if (r != rank && (a.row(r)[word] & bit)) {
                auto dst = a.row(r).subspan(word);
                for (size_t i = 0; i < stride - word; i++) {
                    dst[i] ^= prow[i];
                }
            }
        }
        cache.pivot_cols.push_back(c);
        rank++;
    }
    cache.rank = rank;
    cache.rref = std::move(a);
    return cache;
}

size_t rank(const BitMatrix &a) {
    return rref(a).rank;
}

BitMatrix kernel_basis(const RrefCache &cache) {
    const BitMatrix &m = cache.rref;
    size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : cache.pivot_cols) {
        is_pivot[p] = true;
    }
    BitMatrix basis(cols - cache.rank, cols);
    size_t out = 0;
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        basis.set(out, f);
        for (size_t i = 0; i < cache.rank; i++) {
            if (m.get(i, f)) {
                basis.set(out, cache.pivot_cols[i]);
            }
        }
        out++;
    }
    return basis;
}

BitMatrix kernel_basis(const BitMatrix &a) {
    return kernel_basis(rref(a));
}

bool in_rowspace(const RrefCache &cache, std::span<const uint64_t> v, std::span<uint64_t> scratch) {
    std::copy(v.begin(), v.end(), scratch.begin());
    for (size_t i = 0; i < cache.rank; i++) {
        size_t p = cache.pivot_cols[i];
        if ((scratch[p / kWordBits] >> (p % kWordBits)) & 1) {
            xor_words(scratch, cache.rref.row(i));
        }
    }
    return words_zero(scratch);
}

bool in_rowspace(const RrefCache &cache, const BitVector &v) {
    if (v.size() != cache.rref.cols()) {
        throw DimensionError("vector of length " + std::to_string(v.size()) + " queried against row space of width " +
                             std::to_string(cache.rref.cols()));
    }
    std::vector<uint64_t> scratch(v.words().size());
    return in_rowspace(cache, v.words(), scratch);
}

BitMatrix vstack(const BitMatrix &top, const BitMatrix &bottom) {
    if (top.cols() != bottom.cols()) {
        throw DimensionError("cannot stack " + shape(top) + " over " + shape(bottom));
    }
    BitMatrix out(top.rows() + bottom.rows(), top.cols());
    for (size_t r = 0; r < top.rows(); r++) {
        std::copy(top.row(r).begin(), top.row(r).end(), out.row(r).begin());
    }
    for (size_t r = 0; r < bottom.rows(); r++) {
        std::copy(bottom.row(r).begin(), bottom.row(r).end(), out.row(top.rows() + r).begin());
    }
    return out;
}

}  // namespace mmcodes

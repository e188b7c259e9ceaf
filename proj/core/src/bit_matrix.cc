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

#include "mmcodes/bit_matrix.h"

#include <algorithm>

#include "mmcodes/errors.h"

namespace mmcodes {

BitVector BitVector::from_support(size_t size, std::span<const size_t> support) {
    BitVector v(size);
    for (size_t i : support) {
        if (i >= size) {
            throw DimensionError("support index " + std::to_string(i) + " out of range for length " +
                                 std::to_string(size));
        }
        v.flip(i);
    }
    return v;
}

BitVector BitVector::from_words(size_t size, std::span<const uint64_t> words) {
    BitVector v(size);
    std::copy_n(words.begin(), v.words_.size(), v.words_.begin());
    if (!v.words_.empty()) {
        v.words_.back() &= tail_mask(size);
    }
    return v;
}

void BitVector::set(size_t i, bool value) {
    uint64_t bit = uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= bit;
    } else {
        words_[i / kWordBits] &= ~bit;
    }
}

std::vector<size_t> BitVector::support() const {
    std::vector<size_t> out;
    for (size_t w = 0; w < words_.size(); w++) {
        uint64_t bits = words_[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.size_ != size_) {
        throw DimensionError("xor of vectors with lengths " + std::to_string(size_) + " and " +
                             std::to_string(other.size_));
    }
    xor_words(words_, other.words_);
    return *this;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), bits_(rows * words_for_bits(cols), 0) {}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_dense(const std::vector<std::vector<int>> &dense) {
    size_t cols = dense.empty() ? 0 : dense.front().size();
    BitMatrix m(dense.size(), cols);
    for (size_t r = 0; r < dense.size(); r++) {
        if (dense[r].size() != cols) {
            throw DimensionError("ragged dense matrix");
        }
        for (size_t c = 0; c < cols; c++) {
            if (dense[r][c] & 1) {
                m.set(r, c);
            }
        }
    }
    return m;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    uint64_t bit = uint64_t{1} << (c % kWordBits);
    uint64_t &word = bits_[r * stride_ + c / kWordBits];
    if (value) {
        word |= bit;
    } else {
        word &= ~bit;
    }
}

BitVector BitMatrix::row_vector(size_t r) const {
    return BitVector::from_words(cols_, row(r));
}

void BitMatrix::set_row(size_t r, const BitVector &v) {
    if (v.size() != cols_) {
        throw DimensionError("row length " + std::to_string(v.size()) + " does not match " +
                             std::to_string(cols_) + " columns");
    }
    std::copy(v.words().begin(), v.words().end(), row(r).begin());
}

void BitMatrix::xor_row_into(size_t dst, size_t src) {
    uint64_t *d = bits_.data() + dst * stride_;
    const uint64_t *s = bits_.data() + src * stride_;
    for (size_t i = 0; i < stride_; i++) {
        d[i] ^= s[i];
    }
}

void BitMatrix::swap_rows(size_t a, size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

std::vector<size_t> BitMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    auto words = row(r);
    for (size_t w = 0; w < stride_; w++) {
        uint64_t bits = words[w];
        while (bits) {
            out.push_back(w * kWordBits + static_cast<size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::vector<size_t>> BitMatrix::column_supports() const {
    std::vector<std::vector<size_t>> cols(cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : row_support(r)) {
            cols[c].push_back(r);
        }
    }
    return cols;
}

void BitMatrix::xor_block(size_t r0, size_t c0, const BitMatrix &block) {
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) {
        throw DimensionError("block does not fit");
    }
    for (size_t r = 0; r < block.rows_; r++) {
        for (size_t c : block.row_support(r)) {
            flip(r0 + r, c0 + c);
        }
    }
}

BitVector BitMatrix::multiply(const BitVector &v) const {
    if (v.size() != cols_) {
        throw DimensionError("matrix with " + std::to_string(cols_) + " columns times vector of length " +
                             std::to_string(v.size()));
    }
    BitVector out(rows_);
    auto vw = v.words();
    for (size_t r = 0; r < rows_; r++) {
        auto rw = row(r);
        uint64_t acc = 0;
        for (size_t i = 0; i < stride_; i++) {
            acc ^= rw[i] & vw[i];
        }
        if (std::popcount(acc) & 1) {
            out.set(r);
        }
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string out;
    out.reserve(rows_ * (cols_ + 1));
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out.push_back(get(r, c) ? '1' : '.');
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace mmcodes

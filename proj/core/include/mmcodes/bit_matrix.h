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

#ifndef MMCODES_BIT_MATRIX_H
#define MMCODES_BIT_MATRIX_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mmcodes {

inline constexpr size_t kWordBits = 64;

constexpr size_t words_for_bits(size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

/// Mask of the valid bits in the last word of a `bits`-long packed row.
constexpr uint64_t tail_mask(size_t bits) {
    size_t r = bits % kWordBits;
    return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
}

inline size_t popcount_words(std::span<const uint64_t> words) {
    size_t total = 0;
    for (uint64_t w : words) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

inline void xor_words(std::span<uint64_t> dst, std::span<const uint64_t> src) {
    for (size_t i = 0; i < dst.size(); i++) {
        dst[i] ^= src[i];
    }
}

inline bool words_zero(std::span<const uint64_t> words) {
    for (uint64_t w : words) {
        if (w) {
            return false;
        }
    }
    return true;
}

/// Packed GF(2) vector. Bits past `size()` are always zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t size) : size_(size), words_(words_for_bits(size), 0) {}

    static BitVector from_support(size_t size, std::span<const size_t> support);
    static BitVector from_words(size_t size, std::span<const uint64_t> words);

    size_t size() const { return size_; }
    bool get(size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1; }
    void set(size_t i, bool value = true);
    void flip(size_t i) { words_[i / kWordBits] ^= uint64_t{1} << (i % kWordBits); }

    size_t weight() const { return popcount_words(words_); }
    bool is_zero() const { return words_zero(words_); }
    std::vector<size_t> support() const;

    std::span<uint64_t> words() { return words_; }
    std::span<const uint64_t> words() const { return words_; }

    BitVector &operator^=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;

  private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major bit-packed matrix over GF(2). Each row occupies
/// `words_per_row()` words; padding bits past `cols()` stay zero.
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Builds from a dense 0/1 table; every row must have the same length.
    static BitMatrix from_dense(const std::vector<std::vector<int>> &dense);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return stride_; }

    bool get(size_t r, size_t c) const {
        return (bits_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
    }
    void set(size_t r, size_t c, bool value = true);
    void flip(size_t r, size_t c) {
        bits_[r * stride_ + c / kWordBits] ^= uint64_t{1} << (c % kWordBits);
    }

    std::span<uint64_t> row(size_t r) { return {bits_.data() + r * stride_, stride_}; }
    std::span<const uint64_t> row(size_t r) const { return {bits_.data() + r * stride_, stride_}; }
    BitVector row_vector(size_t r) const;
    void set_row(size_t r, const BitVector &v);

    void xor_row_into(size_t dst, size_t src);
    void swap_rows(size_t a, size_t b);

    size_t row_weight(size_t r) const { return popcount_words(row(r)); }
    std::vector<size_t> row_support(size_t r) const;
    /// Row indices of every set bit, column by column.
    std::vector<std::vector<size_t>> column_supports() const;
    size_t weight() const { return popcount_words(bits_); }
    bool is_zero() const { return words_zero(bits_); }

    /// XORs `block` into this matrix with its top-left corner at (r0, c0).
    void xor_block(size_t r0, size_t c0, const BitMatrix &block);

    /// Matrix-vector product M v.
    BitVector multiply(const BitVector &v) const;

    /// Rows rendered as '1'/'.' strings, one per line.
    std::string str() const;

    bool operator==(const BitMatrix &other) const = default;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> bits_;
};

}  // namespace mmcodes

#endif

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

#ifndef MMCODES_TESTS_ORACLES_H
#define MMCODES_TESTS_ORACLES_H

// Reference implementations for tests. Everything here works on dense
// byte matrices with textbook algorithms and shares no code with the
// library beyond the BitMatrix conversion helpers.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mmcodes/bit_matrix.h"

namespace oracle {

using Row = std::vector<uint8_t>;
using Dense = std::vector<Row>;

inline Dense to_dense(const mmcodes::BitMatrix &m) {
    Dense d(m.rows(), Row(m.cols(), 0));
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c = 0; c < m.cols(); c++) {
            d[r][c] = m.get(r, c) ? 1 : 0;
        }
    }
    return d;
}

inline mmcodes::BitMatrix from_dense(const Dense &d, size_t cols) {
    mmcodes::BitMatrix m(d.size(), cols);
    for (size_t r = 0; r < d.size(); r++) {
        for (size_t c = 0; c < cols; c++) {
            if (d[r][c]) {
                m.set(r, c);
            }
        }
    }
    return m;
}

inline Dense random_dense(size_t rows, size_t cols, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution bit(density);
    Dense d(rows, Row(cols, 0));
    for (auto &row : d) {
        for (auto &v : row) {
            v = bit(rng) ? 1 : 0;
        }
    }
    return d;
}

inline Dense multiply(const Dense &a, const Dense &b, size_t b_cols) {
    Dense out(a.size(), Row(b_cols, 0));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t k = 0; k < b.size(); k++) {
            if (!a[i][k]) {
                continue;
            }
            for (size_t j = 0; j < b_cols; j++) {
                out[i][j] ^= b[k][j];
            }
        }
    }
    return out;
}

inline Dense transpose(const Dense &a, size_t cols) {
    Dense out(cols, Row(a.size(), 0));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < cols; j++) {
            out[j][i] = a[i][j];
        }
    }
    return out;
}

/// Row echelon form by plain Gaussian elimination; returns the rank.
inline size_t eliminate(Dense &a, size_t cols) {
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < a.size(); c++) {
        size_t pivot = rank;
        while (pivot < a.size() && !a[pivot][c]) {
            pivot++;
        }
        if (pivot == a.size()) {
            continue;
        }
        std::swap(a[pivot], a[rank]);
        for (size_t r = 0; r < a.size(); r++) {
            if (r != rank && a[r][c]) {
                for (size_t k = 0; k < cols; k++) {
                    a[r][k] ^= a[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

inline size_t rank(Dense a, size_t cols) {
    return eliminate(a, cols);
}

/// v is in the span of the rows of `a` iff appending it keeps the rank.
inline bool in_span(const Dense &a, const Row &v) {
    size_t cols = v.size();
    Dense b = a;
    size_t r0 = rank(b, cols);
    b.push_back(v);
    return rank(b, cols) == r0;
}

inline Row mat_vec(const Dense &a, const Row &v) {
    Row out(a.size(), 0);
    for (size_t i = 0; i < a.size(); i++) {
        uint8_t acc = 0;
        for (size_t j = 0; j < v.size(); j++) {
            acc ^= static_cast<uint8_t>(a[i][j] & v[j]);
        }
        out[i] = acc;
    }
    return out;
}

inline size_t weight(const Row &v) {
    return static_cast<size_t>(std::count(v.begin(), v.end(), uint8_t{1}));
}

inline Row bits_of(uint64_t mask, size_t n) {
    Row v(n, 0);
    for (size_t i = 0; i < n; i++) {
        v[i] = (mask >> i) & 1;
    }
    return v;
}

/// Every vector in the row space of `a`, by enumerating combinations of a basis.
inline std::vector<Row> span_elements(const Dense &a, size_t cols) {
    Dense basis = a;
    size_t r = eliminate(basis, cols);
    basis.resize(r);
    std::vector<Row> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << r); mask++) {
        Row v(cols, 0);
        for (size_t i = 0; i < r; i++) {
            if ((mask >> i) & 1) {
                for (size_t k = 0; k < cols; k++) {
                    v[k] ^= basis[i][k];
                }
            }
        }
        out.push_back(v);
    }
    return out;
}

/// Cyclic shift on Z_l: e_i -> e_{i+1}.
inline Dense shift(size_t l, size_t power) {
    Dense s(l, Row(l, 0));
    for (size_t i = 0; i < l; i++) {
        s[(i + power) % l][i] = 1;
    }
    return s;
}

inline Dense kron(const Dense &a, size_t a_cols, const Dense &b, size_t b_cols) {
    Dense out(a.size() * b.size(), Row(a_cols * b_cols, 0));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a_cols; j++) {
            if (!a[i][j]) {
                continue;
            }
            for (size_t k = 0; k < b.size(); k++) {
                for (size_t l = 0; l < b_cols; l++) {
                    out[i * b.size() + k][j * b_cols + l] = b[k][l];
                }
            }
        }
    }
    return out;
}

/// Regular representation of a polynomial given by its exponent vectors:
/// the sum over monomials of the Kronecker product of per-variable shifts,
/// first variable outermost.
inline Dense circulant(const std::vector<std::vector<uint32_t>> &monomials, const std::vector<uint32_t> &orders) {
    size_t n = 1;
    for (uint32_t l : orders) {
        n *= l;
    }
    Dense sum(n, Row(n, 0));
    for (const auto &e : monomials) {
        Dense m = {{1}};
        size_t cols = 1;
        for (size_t v = 0; v < orders.size(); v++) {
            m = kron(m, cols, shift(orders[v], e[v]), orders[v]);
            cols *= orders[v];
        }
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                sum[i][j] ^= m[i][j];
            }
        }
    }
    return sum;
}

/// min{|v| : check v = 0, v not in rowspace(trivial)} over all 2^n vectors.
inline std::optional<size_t> min_weight(const Dense &check, const Dense &trivial, size_t n) {
    std::optional<size_t> best;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        Row v = bits_of(mask, n);
        size_t w = weight(v);
        if (best && w >= *best) {
            continue;
        }
        if (weight(mat_vec(check, v)) != 0 || in_span(trivial, v)) {
            continue;
        }
        best = w;
    }
    return best;
}

/// min{|s| : meta s = 0, s not in the column space of p}; s ranges over all
/// 2^m syndromes, m = p.size().
inline std::optional<size_t> single_shot(const Dense &meta, const Dense &p, size_t p_cols) {
    size_t m = p.size();
    Dense columns = transpose(p, p_cols);
    std::optional<size_t> best;
    for (uint64_t mask = 1; mask < (uint64_t{1} << m); mask++) {
        Row s = bits_of(mask, m);
        size_t w = weight(s);
        if (best && w >= *best) {
            continue;
        }
        if (weight(mat_vec(meta, s)) != 0 || in_span(columns, s)) {
            continue;
        }
        best = w;
    }
    return best;
}

/// Confinement profile by brute force. Entry w-1 is the minimum of |h e|
/// over errors e of weight w with h e != 0 whose weight cannot be lowered
/// by adding any element of rowspace(g); nullopt if there is none.
inline std::vector<std::optional<size_t>> confinement(const Dense &h, const Dense &g, size_t n, size_t w_max) {
    std::vector<Row> stabilizers = span_elements(g, n);
    std::vector<std::optional<size_t>> out(w_max);
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); mask++) {
        Row e = bits_of(mask, n);
        size_t w = weight(e);
        if (w > w_max) {
            continue;
        }
        size_t s = weight(mat_vec(h, e));
        if (s == 0 || (out[w - 1] && *out[w - 1] <= s)) {
            continue;
        }
        bool irreducible = true;
        for (const Row &st : stabilizers) {
            size_t reduced = 0;
            for (size_t i = 0; i < n; i++) {
                reduced += (e[i] ^ st[i]) & 1;
            }
            if (reduced < w) {
                irreducible = false;
                break;
            }
        }
        if (irreducible) {
            out[w - 1] = s;
        }
    }
    return out;
}

}  // namespace oracle

#endif

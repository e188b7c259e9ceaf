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

#ifndef MMCODES_TESTS_GENERATORS_H
#define MMCODES_TESTS_GENERATORS_H

// Hand-rolled random generators for property tests.

#include <random>
#include <vector>

#include "mmcodes/bit_matrix.h"
#include "mmcodes/ring.h"

namespace gen {

inline size_t uniform(std::mt19937_64 &rng, size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

/// A product of between 1 and max_vars cyclic groups with at most max_size elements.
inline mmcodes::GroupSpec spec(std::mt19937_64 &rng, size_t max_vars, size_t max_size) {
    while (true) {
        size_t d = uniform(rng, 1, max_vars);
        std::vector<uint32_t> orders;
        size_t size = 1;
        for (size_t i = 0; i < d; i++) {
            auto l = static_cast<uint32_t>(uniform(rng, 1, 6));
            orders.push_back(l);
            size *= l;
        }
        if (size <= max_size) {
            return mmcodes::GroupSpec(orders);
        }
    }
}

/// Random element with up to max_terms monomials (duplicates cancel, so it may be zero).
inline mmcodes::RingElem poly(const mmcodes::GroupSpec &spec, std::mt19937_64 &rng, size_t max_terms) {
    size_t terms = uniform(rng, 0, max_terms);
    std::vector<uint32_t> idx;
    for (size_t i = 0; i < terms; i++) {
        idx.push_back(static_cast<uint32_t>(uniform(rng, 0, spec.size() - 1)));
    }
    return mmcodes::RingElem::from_indices(spec, idx);
}

inline mmcodes::BitMatrix matrix(size_t rows, size_t cols, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution bit(density);
    mmcodes::BitMatrix m(rows, cols);
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            if (bit(rng)) {
                m.set(r, c);
            }
        }
    }
    return m;
}

inline mmcodes::BitVector vector(size_t n, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution bit(density);
    mmcodes::BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        if (bit(rng)) {
            v.set(i);
        }
    }
    return v;
}

}  // namespace gen

#endif

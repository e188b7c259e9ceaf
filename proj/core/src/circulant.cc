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

#include "mmcodes/circulant.h"

#include <stdexcept>

#include "mmcodes/errors.h"
#include "mmcodes/gf2.h"

namespace mmcodes {

BitMatrix poly_to_circulant(const RingElem &f, const GroupSpec &spec) {
    if (!(f.spec() == spec)) {
        throw std::invalid_argument("polynomial over " + f.spec().str() + " converted with spec " + spec.str());
    }
    size_t n = spec.size();
    size_t d = spec.num_vars();
    auto terms = f.exponent_vectors();
    BitMatrix c(n, n);
    std::vector<uint32_t> idxs(d);
    for (size_t j = 0; j < n; j++) {
        size_t tmp = j;
        for (size_t k = d; k-- > 0;) {
            idxs[k] = static_cast<uint32_t>(tmp % spec.order(k));
            tmp /= spec.order(k);
        }
        for (const auto &e : terms) {
            size_t row = 0;
            for (size_t k = 0; k < d; k++) {
                row = row * spec.order(k) + (idxs[k] + e[k]) % spec.order(k);
            }
            c.flip(row, j);
        }
    }
    return c;
}

bool circulant_commute_check(std::span<const BitMatrix> mats) {
    for (const auto &m : mats) {
        if (m.rows() != m.cols() || m.rows() != mats.front().rows()) {
            throw DimensionError("commutativity check needs square matrices of one size");
        }
    }
    for (size_t i = 0; i < mats.size(); i++) {
        for (size_t j = i + 1; j < mats.size(); j++) {
            if (!(mat_mul(mats[i], mats[j]) == mat_mul(mats[j], mats[i]))) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace mmcodes

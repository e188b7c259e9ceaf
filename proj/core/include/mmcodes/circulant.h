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

#ifndef MMCODES_CIRCULANT_H
#define MMCODES_CIRCULANT_H

#include <span>

#include "mmcodes/bit_matrix.h"
#include "mmcodes/ring.h"

namespace mmcodes {

/// Regular representation of `f` as an n x n matrix, n = spec.size().
///
/// Column j is the group element with mixed-radix index j; for every
/// monomial e of f the entry (index(j + e), j) is toggled. Throws
/// std::invalid_argument if f lives over a different spec.
BitMatrix poly_to_circulant(const RingElem &f, const GroupSpec &spec);

/// True iff every pair of matrices commutes. Throws DimensionError unless all
/// matrices are square of one size.
bool circulant_commute_check(std::span<const BitMatrix> mats);

}  // namespace mmcodes

#endif

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

#ifndef MMCODES_KOSZUL_H
#define MMCODES_KOSZUL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mmcodes/bit_matrix.h"
#include "mmcodes/ring.h"

namespace mmcodes {

/// Largest generator count accepted by symbolic_boundaries.
inline constexpr size_t kMaxKoszulLength = 16;

/// One boundary map of the Koszul complex on t formal generators.
///
/// Rows are (k-1)-subsets and columns are k-subsets of {1..t}, both in
/// lexicographic order. Entry (T, U) is generator j iff T = U \ {j}.
/// Signs vanish over F2. Stored column by column since the grid is sparse.
struct SymbolicMap {
    struct Entry {
        size_t row;
        uint8_t generator;  // 1-based
    };

    size_t rows = 0;
    size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    /// 0 for a zero entry, otherwise the 1-based generator index.
    uint8_t at(size_t row, size_t col) const;
};

struct SymbolicBoundary {
    size_t t = 0;
    /// basis[k] lists the k-subsets as bitmasks (bit j-1 set for generator j).
    std::vector<std::vector<uint32_t>> basis;
    /// maps[k-1] is the boundary from degree k to degree k-1.
    std::vector<SymbolicMap> maps;

    const SymbolicMap &map(size_t k) const { return maps.at(k - 1); }
};

/// Throws std::invalid_argument for t == 0 or t > kMaxKoszulLength.
SymbolicBoundary symbolic_boundaries(size_t t);

/// Substitutes circulant blocks into every symbolic map. Result [k-1] is the
/// C(t,k-1)*n x C(t,k)*n matrix of the boundary from degree k to k-1.
///
/// Throws std::invalid_argument on generator count or spec mismatch and
/// VerificationError if the generator circulants fail to commute.
std::vector<BitMatrix> instantiate(const SymbolicBoundary &sym, std::span<const RingElem> gens,
                                   const GroupSpec &spec);

/// True iff maps[k] * maps[k+1] == 0 for every consecutive pair.
bool verify_complex(std::span<const BitMatrix> maps);

struct Provenance {
    std::string name;
    std::string source;
};

/// A CSS code with optional metachecks: M_X P_X = 0, P_X P_Z^T = 0, M_Z P_Z = 0.
/// All matrices act on column vectors; P_X and P_Z have one column per qubit.
struct MCssCode {
    size_t n = 0;
    BitMatrix p_x;
    BitMatrix p_z;
    std::optional<BitMatrix> m_x;
    std::optional<BitMatrix> m_z;

    std::optional<GroupSpec> spec;
    std::vector<RingElem> generators;
    std::optional<VariableNames> variables;
    size_t t = 0;
    size_t q = 0;
    /// Dimension of every chain space, degrees 0..t.
    std::vector<size_t> chain_dims;
    Provenance provenance;
};

/// Picks qubits on degree q (default floor(t/2)):
/// P_X = d_q, P_Z = d_{q+1}^T, M_X = d_{q-1} when q >= 2, M_Z = d_{q+2}^T when q <= t-2.
///
/// Throws std::invalid_argument if q is outside [1, t-1] and
/// VerificationError if any orthogonality relation fails.
MCssCode extract_mcss(std::span<const BitMatrix> maps, size_t t, std::optional<size_t> q_override = std::nullopt);

/// Full pipeline: symbolic maps, circulant substitution, chain check, extraction.
MCssCode build_mm_code(std::span<const RingElem> gens, const GroupSpec &spec,
                       std::optional<size_t> q_override = std::nullopt, Provenance provenance = {});

struct OrthogonalityReport {
    bool px_pz = false;
    std::optional<bool> mx_px;
    std::optional<bool> mz_pz;

    bool ok() const { return px_pz && mx_px.value_or(true) && mz_pz.value_or(true); }
};

OrthogonalityReport check_orthogonality(const MCssCode &code);

}  // namespace mmcodes

#endif

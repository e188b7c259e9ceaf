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

#include "mmcodes/koszul.h"

#include <bit>
#include <stdexcept>

#include "mmcodes/circulant.h"
#include "mmcodes/errors.h"
#include "mmcodes/gf2.h"

namespace mmcodes {

uint8_t SymbolicMap::at(size_t row, size_t col) const {
    for (const auto &e : columns.at(col)) {
        if (e.row == row) {
            return e.generator;
        }
    }
    return 0;
}

namespace {

// k-subsets of {0..t-1} in lexicographic order of their sorted elements.
std::vector<uint32_t> lex_subsets(size_t t, size_t k) {
    std::vector<uint32_t> out;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; i++) {
        idx[i] = i;
    }
    while (true) {
        uint32_t mask = 0;
        for (size_t i : idx) {
            mask |= uint32_t{1} << i;
        }
        out.push_back(mask);
        size_t i = k;
        while (i > 0 && idx[i - 1] == t - k + (i - 1)) {
            i--;
        }
        if (i == 0) {
            return out;
        }
        idx[i - 1]++;
        for (size_t j = i; j < k; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

}  // namespace

SymbolicBoundary symbolic_boundaries(size_t t) {
    if (t == 0 || t > kMaxKoszulLength) {
        throw std::invalid_argument("Koszul length must be in 1.." + std::to_string(kMaxKoszulLength) + ", got " +
                                    std::to_string(t));
    }
    SymbolicBoundary sym;
    sym.t = t;
    std::vector<size_t> position(size_t{1} << t, 0);
    for (size_t k = 0; k <= t; k++) {
        sym.basis.push_back(lex_subsets(t, k));
        for (size_t i = 0; i < sym.basis[k].size(); i++) {
            position[sym.basis[k][i]] = i;
        }
    }
    for (size_t k = 1; k <= t; k++) {
        SymbolicMap m;
        m.rows = sym.basis[k - 1].size();
        m.cols = sym.basis[k].size();
        m.columns.resize(m.cols);
        for (size_t c = 0; c < m.cols; c++) {
            uint32_t u = sym.basis[k][c];
            for (uint32_t bits = u; bits; bits &= bits - 1) {
                unsigned j = static_cast<unsigned>(std::countr_zero(bits));
                m.columns[c].push_back({position[u & ~(uint32_t{1} << j)], static_cast<uint8_t>(j + 1)});
            }
        }
        sym.maps.push_back(std::move(m));
    }
    return sym;
}

std::vector<BitMatrix> instantiate(const SymbolicBoundary &sym, std::span<const RingElem> gens,
                                   const GroupSpec &spec) {
    if (gens.size() != sym.t) {
        throw std::invalid_argument("expected " + std::to_string(sym.t) + " generators, got " +
                                    std::to_string(gens.size()));
    }
    std::vector<BitMatrix> circulants;
    circulants.reserve(gens.size());
    for (const auto &g : gens) {
        circulants.push_back(poly_to_circulant(g, spec));
    }
    if (!circulant_commute_check(circulants)) {
        throw VerificationError("generator circulants do not commute pairwise");
    }
    size_t n = spec.size();
    std::vector<BitMatrix> maps;
    for (const auto &m : sym.maps) {
        BitMatrix big(m.rows * n, m.cols * n);
        for (size_t c = 0; c < m.cols; c++) {
            for (const auto &e : m.columns[c]) {
                big.xor_block(e.row * n, c * n, circulants[e.generator - 1]);
            }
        }
        maps.push_back(std::move(big));
    }
    return maps;
}

bool verify_complex(std::span<const BitMatrix> maps) {
    for (size_t k = 0; k + 1 < maps.size(); k++) {
        if (!mat_mul(maps[k], maps[k + 1]).is_zero()) {
            return false;
        }
    }
    return true;
}

MCssCode extract_mcss(std::span<const BitMatrix> maps, size_t t, std::optional<size_t> q_override) {
    if (maps.size() != t) {
        throw std::invalid_argument("expected " + std::to_string(t) + " boundary maps, got " +
                                    std::to_string(maps.size()));
    }
    size_t q = q_override.value_or(t / 2);
    if (q < 1 || q + 1 > t) {
        throw std::invalid_argument("qubit degree q=" + std::to_string(q) + " must lie in 1.." +
                                    std::to_string(t == 0 ? 0 : t - 1));
    }
    auto d = [&](size_t k) -> const BitMatrix & { return maps[k - 1]; };
    MCssCode code;
    code.t = t;
    code.q = q;
    code.p_x = d(q);
    code.p_z = transpose(d(q + 1));
    if (q >= 2) {
        code.m_x = d(q - 1);
    }
    if (q + 2 <= t) {
        code.m_z = transpose(d(q + 2));
    }
    code.n = code.p_x.cols();
    code.chain_dims.push_back(maps[0].rows());
    for (const auto &m : maps) {
        code.chain_dims.push_back(m.cols());
    }

    auto orth = check_orthogonality(code);
    if (!orth.px_pz) {
        throw VerificationError("P_X * P_Z^T != 0");
    }
    if (orth.mx_px == false) {
        throw VerificationError("M_X * P_X != 0");
    }
    if (orth.mz_pz == false) {
        throw VerificationError("M_Z * P_Z != 0");
    }
    return code;
}

OrthogonalityReport check_orthogonality(const MCssCode &code) {
    OrthogonalityReport report;
    report.px_pz = mat_mul(code.p_x, transpose(code.p_z)).is_zero();
    if (code.m_x) {
        report.mx_px = mat_mul(*code.m_x, code.p_x).is_zero();
    }
    if (code.m_z) {
        report.mz_pz = mat_mul(*code.m_z, code.p_z).is_zero();
    }
    return report;
}

MCssCode build_mm_code(std::span<const RingElem> gens, const GroupSpec &spec, std::optional<size_t> q_override,
                       Provenance provenance) {
    auto sym = symbolic_boundaries(gens.size());
    auto maps = instantiate(sym, gens, spec);
    if (!verify_complex(maps)) {
        throw VerificationError("boundary maps do not square to zero");
    }
    MCssCode code = extract_mcss(maps, sym.t, q_override);
    code.spec = spec;
    code.generators.assign(gens.begin(), gens.end());
    code.provenance = std::move(provenance);
    return code;
}

}  // namespace mmcodes

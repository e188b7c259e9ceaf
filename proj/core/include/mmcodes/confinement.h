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

#ifndef MMCODES_CONFINEMENT_H
#define MMCODES_CONFINEMENT_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mmcodes/bit_matrix.h"

namespace mmcodes {

enum class ConfinementMode { Exact, Cluster };

enum class EntryKind {
    /// The value is the true minimum.
    Exact,
    /// The true minimum is at least the value; no error attaining it was seen.
    LowerBound,
    /// Attained by a verified irreducible error; the true minimum may be smaller.
    UpperBound,
    /// Attained by a sampled error whose irreducibility was only partially checked.
    Heuristic,
    /// No irreducible error with a nonzero syndrome was found.
    None,
};

std::string entry_kind_name(EntryKind kind);

struct ConfinementEntry {
    size_t weight = 0;
    std::optional<size_t> value;
    EntryKind kind = EntryKind::None;
};

struct ConfinementProfile {
    std::vector<ConfinementEntry> entries;
    ConfinementMode mode = ConfinementMode::Exact;
    /// Set when exact mode was requested but the budget forced cluster mode.
    std::optional<std::string> warning;

    /// Values in weight order; unset entries are nullopt.
    std::vector<std::optional<size_t>> values() const;
};

struct ConfinementOptions {
    size_t w_max = 4;
    ConfinementMode mode = ConfinementMode::Exact;
    size_t workers = 1;
    /// Cap on the coset table (sum_{j<w_max} C(n, j)) in exact mode.
    uint64_t table_budget = 20'000'000;
    /// Cap on connected supports visited in exact mode. 0 means enumeration_budget().
    uint64_t enumeration_budget = 0;
    /// Cluster mode: number of random growth samples.
    size_t samples = 20000;
    uint64_t seed = 0;
};

/// Profile entry w is the minimum of |H e| over errors e with nonzero
/// syndrome whose weight cannot be lowered by adding rows of G and equals w.
///
/// Exact mode enumerates supports connected through the checks of H and
/// tests irreducibility against a table of coset representatives of every
/// weight below w_max. Disconnected errors split into check-disjoint pieces
/// whose weights and syndrome weights add, so the connected results are
/// closed under min-plus combination; an entry whose connected value beats
/// the closure is exact, otherwise the closure is reported as a lower bound.
/// Falls back to cluster mode with a warning when over budget.
ConfinementProfile confinement(const BitMatrix &h, const BitMatrix &g, const ConfinementOptions &opts);

}  // namespace mmcodes

#endif

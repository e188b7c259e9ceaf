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

#ifndef MMCODES_SEARCH_H
#define MMCODES_SEARCH_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmcodes/code_params.h"
#include "mmcodes/enumeration.h"
#include "mmcodes/ring.h"

namespace mmcodes {

struct SearchConfig {
    size_t t = 4;
    std::vector<GroupSpec> orders;
    size_t term_min = 2;
    size_t term_max = 6;
    size_t require_k_min = 1;
    /// Candidates with a logical below this weight are rejected; the
    /// exhaustive search runs up to this weight.
    size_t w_exhaustive = 3;
    size_t iterations = 200;
    std::optional<size_t> confinement_w;
    size_t max_candidates = 100;
    uint64_t seed = 0;
    size_t workers = 1;
    /// Templates such as "(1+v_a)(1+v_b v_c)". Placeholders v_<letter> are
    /// bound to distinct random variables; generator i uses template i mod size.
    std::vector<std::string> structured_families;
    std::optional<VariableNames> variables;
    std::optional<size_t> q_override;

    /// Throws std::invalid_argument describing the first violated constraint.
    void validate() const;
};

/// t generators over `spec`. Term counts are uniform in [term_min, term_max]
/// and monomials are distinct. Throws std::invalid_argument if a term count
/// exceeds the ring size or a template needs more variables than exist.
std::vector<RingElem> sample_generators(const SearchConfig &config, const GroupSpec &spec, Rng &rng);

/// Spec plus the sorted list of sorted monomial lists.
std::string canonical_key(const GroupSpec &spec, const std::vector<RingElem> &gens);

struct Rejection {
    /// 1 build, 2 logical count, 3 exhaustive distance.
    int stage = 0;
    std::string cause;
};

struct Evaluation {
    std::optional<CodeReport> report;
    std::optional<Rejection> rejection;
};

/// Staged filter: build and verify, k >= max(1, require_k_min), no logical
/// below w_exhaustive, then randomized distance and optional confinement.
/// The analysis seed is derived from the canonical key, so a candidate gets
/// the same report whatever search seed found it.
Evaluation evaluate_candidate(const std::vector<RingElem> &gens, const GroupSpec &spec, const SearchConfig &config);

inline constexpr int kSearchStages = 5;

struct SearchStats {
    size_t drawn = 0;
    size_t duplicates = 0;
    size_t evaluated = 0;
    size_t accepted = 0;
    std::array<size_t, kSearchStages + 1> rejected_by_stage{};
};

/// Draws max_candidates candidates (draw i uses its own stream derived from
/// (seed, i)), skips duplicates, evaluates the rest on `workers` threads and
/// calls `emit` for accepted reports in draw order from a single thread.
SearchStats run_search(const SearchConfig &config, const std::function<void(const CodeReport &)> &emit);

/// run_search writing one JSON report per line followed by a footer record
/// with the counters.
SearchStats run_search_jsonl(const SearchConfig &config, std::ostream &out);

}  // namespace mmcodes

#endif

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

#ifndef MMCODES_CODE_PARAMS_H
#define MMCODES_CODE_PARAMS_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmcodes/confinement.h"
#include "mmcodes/distance.h"
#include "mmcodes/koszul.h"

namespace mmcodes {

enum class PauliType { X, Z };

std::string pauli_name(PauliType type);

/// k = n - rank(P_X) - rank(P_Z).
size_t logical_count(const MCssCode &code);

/// Z-type logicals live in ker P_X modulo rowspace P_Z; X-type the other way round.
DistanceBound distance_exhaustive(const MCssCode &code, PauliType type, const ExhaustiveOptions &opts);
DistanceBound distance_randomized(const MCssCode &code, PauliType type, const RandomizedOptions &opts);

/// min{|s| : M s = 0, s not a syndrome of P} with (M, P) = (M_X, P_X) or
/// (M_Z, P_Z). Runs the exhaustive search to `exhaustive.w_max` and, unless
/// that settles the value, randomized sampling. Throws MissingMetacheckError
/// when the metacheck does not exist.
DistanceBound single_shot_distance(const MCssCode &code, PauliType type, const ExhaustiveOptions &exhaustive,
                                   const RandomizedOptions &randomized);

/// Z errors are detected by P_X and reduced by rows of P_Z; X errors the other way round.
ConfinementProfile confinement_profile(const MCssCode &code, PauliType type, const ConfinementOptions &opts);

struct CheckWeightStats {
    double w_med_x = 0;
    double w_med_z = 0;
    size_t w_max_x = 0;
    size_t w_max_z = 0;
    /// Over the rows of P_X and P_Z together.
    double w_med = 0;
    size_t w_max = 0;
};

/// Median (mean of the middle pair for even counts) and maximum row weight
/// of P_X, of P_Z and of both stacked.
CheckWeightStats check_weight_stats(const MCssCode &code);

struct AnalysisOptions {
    size_t w_exhaustive = 4;
    size_t iterations = 1000;
    uint64_t seed = 0;
    size_t workers = 1;
    /// Compute single-shot distances when the metachecks exist.
    bool single_shot = true;
    std::optional<size_t> confinement_w;
    ConfinementMode confinement_mode = ConfinementMode::Exact;
    /// 0 means enumeration_budget().
    uint64_t budget = 0;
    bool timing = false;
};

struct CodeReport {
    std::string name;
    std::vector<uint32_t> orders;
    std::vector<std::string> generators;
    size_t t = 0;
    size_t q = 0;
    std::vector<size_t> chain_dims;

    size_t n = 0;
    size_t k = 0;
    DistanceBound d_x;
    DistanceBound d_z;
    std::optional<DistanceBound> d_ss_x;
    std::optional<DistanceBound> d_ss_z;
    std::optional<ConfinementProfile> confinement_x;
    std::optional<ConfinementProfile> confinement_z;
    std::optional<size_t> d_s;
    bool d_s_exact = false;
    CheckWeightStats weights;

    AnalysisOptions options;
    /// Wall-clock seconds per stage, only filled when options.timing is set.
    std::map<std::string, double> timings;
};

/// Called after a named stage ("k", then "exhaustive") with the partial report.
/// Returning false stops the analysis there.
using StageHook = std::function<bool(std::string_view stage, const CodeReport &partial)>;

/// Runs every analysis requested by `opts`. Throws BudgetError when an
/// exhaustive stage would exceed the budget.
CodeReport analyze(const MCssCode &code, const AnalysisOptions &opts, const StageHook &hook = {});

/// Minimum over every valued entry of both profiles, with exactness.
std::optional<size_t> profile_minimum(const ConfinementProfile *x, const ConfinementProfile *z, bool *exact);

}  // namespace mmcodes

#endif

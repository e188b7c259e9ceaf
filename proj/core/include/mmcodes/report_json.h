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

#ifndef MMCODES_REPORT_JSON_H
#define MMCODES_REPORT_JSON_H

#include <nlohmann/json.hpp>

#include "mmcodes/code_params.h"

namespace mmcodes {

inline constexpr int kReportSchemaVersion = 1;

/// {"lower", "upper", "status", "witness"}; status is "exact", "upper_bound"
/// (a witness exists but may not be minimal) or "lower_bound" (no witness).
nlohmann::ordered_json bound_to_json(const DistanceBound &bound);

/// Integral values as JSON integers, others as floats.
nlohmann::ordered_json number_to_json(double value);

nlohmann::ordered_json profile_to_json(const ConfinementProfile &profile);

/// Stable key order; timings only appear when the report was run with timing on.
nlohmann::ordered_json report_to_json(const CodeReport &report);

}  // namespace mmcodes

#endif

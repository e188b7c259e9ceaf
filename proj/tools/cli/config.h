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

#ifndef MMCODES_CLI_CONFIG_H
#define MMCODES_CLI_CONFIG_H

#include <optional>
#include <string>
#include <vector>

#include "mmcodes/koszul.h"
#include "mmcodes/search.h"

namespace mmcodes::cli {

/// Reference parameters a config may carry for comparison.
struct ExpectedParams {
    std::optional<size_t> n;
    std::optional<size_t> k;
    std::optional<size_t> d;
    std::optional<double> w_med;
    std::optional<size_t> w_max;
};

struct BuildConfig {
    std::string name;
    size_t t = 0;
    std::vector<uint32_t> orders;
    std::optional<std::vector<std::string>> variables;
    std::vector<std::string> generators;
    std::optional<size_t> q_override;
    ExpectedParams expected;
    std::string path;

    VariableNames names() const;
};

/// YAML config. Throws ParseError with the file name and line on malformed
/// input or schema violations.
BuildConfig parse_build_config(const std::string &text, const std::string &origin = "<config>");
BuildConfig load_build_config(const std::string &path);

/// Parses every generator over the config's ring. Errors name the generator
/// and keep the byte offset.
std::vector<RingElem> parse_generators(const BuildConfig &config);

/// Parses the generators and runs the full construction. Polynomial errors
/// come back as ParseError naming the generator and byte offset.
MCssCode build_code(const BuildConfig &config);

/// Search config: the build keys (t, orders, variables, q_override) plus
/// term_range, require_k_min, distance_budget {w_exhaustive, iterations},
/// confinement_w_max, max_candidates, seed, workers, structured_families.
/// `orders` may be one spec or a list of specs.
SearchConfig parse_search_config(const std::string &text, const std::string &origin = "<config>");
SearchConfig load_search_config(const std::string &path);

}  // namespace mmcodes::cli

#endif

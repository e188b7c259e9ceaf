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

#ifndef MMCODES_CLI_BUNDLE_H
#define MMCODES_CLI_BUNDLE_H

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/config.h"
#include "mmcodes/koszul.h"

namespace mmcodes::cli {

inline constexpr int kManifestSchemaVersion = 1;

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

enum class MatrixFormat { Mtx, Alist };

/// Named matrices of a code in bundle order: P_X, P_Z, then M_X and M_Z when present.
std::vector<std::pair<std::string, const BitMatrix *>> named_matrices(const MCssCode &code);

/// Manifest describing a code: identity, shapes, chain dimensions, check
/// results and a SHA-256 of every matrix in canonical Matrix Market form.
/// `files` maps a matrix name to its file names per format.
nlohmann::ordered_json make_manifest(const MCssCode &code, const std::vector<MatrixFormat> &formats);

/// Writes every matrix in each format plus manifest.json into `dir`, creating it if needed.
nlohmann::ordered_json write_bundle(const MCssCode &code, const std::string &dir,
                                    const std::vector<MatrixFormat> &formats);

/// Reads a bundle written by write_bundle. Throws VerificationError when a
/// matrix does not match its recorded hash or shape.
MCssCode load_bundle(const std::string &dir);

/// True if `path` is a bundle directory or a manifest.json inside one.
bool is_bundle(const std::string &path);

/// A code from either a YAML config or a bundle.
struct LoadedCode {
    MCssCode code;
    std::optional<BuildConfig> config;
};

LoadedCode load_code(const std::string &path);

}  // namespace mmcodes::cli

#endif

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

#ifndef MMCODES_MATRIX_IO_H
#define MMCODES_MATRIX_IO_H

#include <iosfwd>
#include <string>
#include <string_view>

#include "mmcodes/bit_matrix.h"

namespace mmcodes {

/// MacKay alist: "cols rows", max column and row weight, per-column counts,
/// per-row counts, then the 1-indexed row list of every column and the
/// column list of every row. An empty list is written as a single 0.
std::string to_alist(const BitMatrix &m);
/// Throws ParseError on malformed or inconsistent input. Zero padding in
/// index lists is accepted.
BitMatrix from_alist(std::string_view text);

/// Matrix Market coordinate pattern format, 1-indexed, entries in row-major order.
std::string to_mtx(const BitMatrix &m);
/// Accepts pattern or integer coordinate files; integer entries are reduced mod 2.
BitMatrix from_mtx(std::string_view text);

void write_text_file(const std::string &path, std::string_view content);
std::string read_text_file(const std::string &path);

}  // namespace mmcodes

#endif

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

#ifndef MMCODES_ERRORS_H
#define MMCODES_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmcodes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Matrix or vector shapes that do not compose.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Malformed polynomial text, config or matrix file. `offset` is a byte offset
/// into the parsed text when one is meaningful.
class ParseError : public Error {
  public:
    ParseError(const std::string &message, size_t offset)
        : Error(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string &message) : Error(message), offset_(npos) {}

    size_t offset() const { return offset_; }

    static constexpr size_t npos = static_cast<size_t>(-1);

  private:
    size_t offset_;
};

/// A requested enumeration would exceed the configured work budget.
class BudgetError : public Error {
  public:
    using Error::Error;
};

/// A chain-complex or orthogonality assertion failed.
class VerificationError : public Error {
  public:
    using Error::Error;
};

/// The operation needs a metacheck the code does not have.
class MissingMetacheckError : public Error {
  public:
    using Error::Error;
};

}  // namespace mmcodes

#endif

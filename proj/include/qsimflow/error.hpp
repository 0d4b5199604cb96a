// Copyright 2026 The qsimflow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qsimflow {

/// Failure categories raised by the library. The numeric values are part of
/// the C API (see qsimflow.h) and must stay stable.
enum class ErrorCode : int {
    InvalidArgument = 1,
    OracleTooLarge = 2,
    NotHermitian = 3,
    DimensionMismatch = 4,
    ArityMismatch = 5,
    QubitCountMismatch = 6,
    Unbound = 7,
    TooManyQubits = 8,
    TooFewSpins = 9,
    UnknownModel = 10,
    MissingParameter = 11,
    BadParameterType = 12,
    NotDiagonal = 13,
    EmptyCounts = 14,
    UnknownWorkflow = 15,
    InvalidConfig = 16,
    ParameterizedModelUnsupported = 17,
    LengthMismatch = 18,
    EmptySeries = 19,
    MissingKey = 20,
    ParseError = 21,
    UnknownKey = 22,
    TypeError = 23,
    UnknownBackend = 24,
    NoReference = 25,
    Io = 26,
    UnknownOptimizer = 27,
    UnknownValidator = 28,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), detail_(what) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }
    /// Message without the category prefix; for keyed errors this is the key
    /// or path that failed.
    [[nodiscard]] const std::string &detail() const noexcept {
        return detail_;
    }

  private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &what) {
    throw Error(code, what);
}

} // namespace qsimflow

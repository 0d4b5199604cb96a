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

#include "qsimflow/error.hpp"

namespace qsimflow {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::OracleTooLarge:
        return "OracleTooLarge";
    case ErrorCode::NotHermitian:
        return "NotHermitian";
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::ArityMismatch:
        return "ArityMismatch";
    case ErrorCode::QubitCountMismatch:
        return "QubitCountMismatch";
    case ErrorCode::Unbound:
        return "Unbound";
    case ErrorCode::TooManyQubits:
        return "TooManyQubits";
    case ErrorCode::TooFewSpins:
        return "TooFewSpins";
    case ErrorCode::UnknownModel:
        return "UnknownModel";
    case ErrorCode::MissingParameter:
        return "MissingParameter";
    case ErrorCode::BadParameterType:
        return "BadParameterType";
    case ErrorCode::NotDiagonal:
        return "NotDiagonal";
    case ErrorCode::EmptyCounts:
        return "EmptyCounts";
    case ErrorCode::UnknownWorkflow:
        return "UnknownWorkflow";
    case ErrorCode::InvalidConfig:
        return "InvalidConfig";
    case ErrorCode::ParameterizedModelUnsupported:
        return "ParameterizedModelUnsupported";
    case ErrorCode::LengthMismatch:
        return "LengthMismatch";
    case ErrorCode::EmptySeries:
        return "EmptySeries";
    case ErrorCode::MissingKey:
        return "MissingKey";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::UnknownKey:
        return "UnknownKey";
    case ErrorCode::TypeError:
        return "TypeError";
    case ErrorCode::UnknownBackend:
        return "UnknownBackend";
    case ErrorCode::NoReference:
        return "NoReference";
    case ErrorCode::Io:
        return "Io";
    case ErrorCode::UnknownOptimizer:
        return "UnknownOptimizer";
    case ErrorCode::UnknownValidator:
        return "UnknownValidator";
    }
    return "Unknown";
}

} // namespace qsimflow

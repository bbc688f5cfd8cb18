// Copyright 2026 The z4dc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "z4dc/error.hpp"

namespace z4dc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
        case ErrorKind::UnsupportedDivisor: return "UnsupportedDivisor";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::NotADivisor: return "NotADivisor";
        case ErrorKind::InternalLiftCheckFailed: return "InternalLiftCheckFailed";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::EvenLength: return "EvenLength";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DegreeOverflow: return "DegreeOverflow";
        case ErrorKind::DivisibilityChainBroken: return "DivisibilityChainBroken";
        case ErrorKind::IdealConditionViolation: return "IdealConditionViolation";
        case ErrorKind::DegenerateGenerators: return "DegenerateGenerators";
        case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorKind::ZeroCode: return "ZeroCode";
        case ErrorKind::NotFree: return "NotFree";
        case ErrorKind::NotMonic: return "NotMonic";
        case ErrorKind::ProjectionNotFree: return "ProjectionNotFree";
        case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
        case ErrorKind::LatticeTooLarge: return "LatticeTooLarge";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace z4dc

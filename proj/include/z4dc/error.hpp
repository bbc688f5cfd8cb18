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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace z4dc {

enum class ErrorKind {
    // ring
    NonUnitLeadingCoefficient,
    UnsupportedDivisor,
    ZeroPolynomial,
    BothZero,
    NotADivisor,
    InternalLiftCheckFailed,
    NotInvertible,
    EvenLength,
    // linalg / code
    DimensionMismatch,
    DegreeOverflow,
    DivisibilityChainBroken,
    IdealConditionViolation,
    DegenerateGenerators,
    EnumerationCapExceeded,
    // gray
    ZeroCode,
    // dual
    NotFree,
    NotMonic,
    ProjectionNotFree,
    DimensionCapExceeded,
    // search
    LatticeTooLarge,
    // io
    ParseError,
    IoError,
    Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message, std::string detail = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Machine-readable qualifier, e.g. which divisibility link failed or which
    // grammar rule a parse violated.
    const std::string& detail() const noexcept { return detail_; }

   private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace z4dc

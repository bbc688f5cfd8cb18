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

#include <optional>
#include <string>
#include <vector>

#include "z4dc/code.hpp"
#include "z4dc/gray.hpp"

namespace z4dc {

constexpr int reference_example_count = 5;

// Generator data of the five reference codes (1-based id).
CodeSpec reference_spec(int id);
std::string reference_title(int id);
// Reference weight distributions of examples 1-4 (weight -> count).
LeeEnumerator reference_enumerator(int id);

struct VerificationRow {
    int example = 0;
    std::string claim;
    std::string expected;
    std::string actual;
    bool pass = false;
    std::string note;
};

struct VerifyOptions {
    EnumOptions enumeration{};
};

std::vector<VerificationRow> verify_example(int id, const VerifyOptions& opt = {});
std::vector<VerificationRow> verify_examples(std::optional<int> only = std::nullopt, const VerifyOptions& opt = {});

}  // namespace z4dc

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

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "z4dc/code.hpp"
#include "z4dc/dual.hpp"
#include "z4dc/error.hpp"
#include "z4dc/examples.hpp"
#include "z4dc/gray.hpp"
#include "z4dc/search.hpp"

namespace z4dc {

using json = nlohmann::ordered_json;

// {"r", "s", "f1", "g1", "l", "f2", "g2"}; each polynomial is a string or an
// ascending coefficient array, absent generators are omitted.
// Throws ParseError (detail names the offending key or grammar rule).
CodeSpec spec_from_json(const json& j);
CodeSpec load_spec(const std::filesystem::path& path);  // IoError when unreadable
json spec_to_json(const CodeSpec& sp);
json code_to_json(const DoubleCyclicCode& c);  // canonical generators, absent ones omitted

json poly_to_json(const PolyZ4& p);
json size_to_json(const CodeSize& s);
json vector_to_json(const CodeVector& v);
json matrix_to_json(const MatZ4& m);

json enumerator_to_json(const LeeEnumerator& e);
std::string enumerator_csv(const LeeEnumerator& e);

struct AnalysisReport {
    CodeSpec input;
    DoubleCyclicCode code;
    MatZ4 generator_matrix{0};
    LeeEnumerator enumerator;
    GrayParams gray;
    std::vector<std::string> notes;
    double seconds = 0;
};

// Throws EnumerationCapExceeded when the code is larger than opt.cap.
AnalysisReport analyze(const CodeSpec& spec, const EnumOptions& opt = {});
json to_json(const AnalysisReport& a, bool timing = true);

json to_json(const ResidueDualCheck& r);
json to_json(const DualReport& d);

json to_json(const SearchResult& r);
json search_to_json(const SearchReport& rep);  // array of results

json to_json(const VerificationRow& row);
std::string verification_table(const std::vector<VerificationRow>& rows);
std::string verification_csv(const std::vector<VerificationRow>& rows);

json error_to_json(const Error& e);

}  // namespace z4dc

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

#include <string>
#include <string_view>

#include "z4dc/poly.hpp"

namespace z4dc {

// Text form: terms joined by '+', each term c, x, x^k, cx or cx^k with c in 0..3.
// Whitespace is ignored and repeated exponents are summed. Throws ParseError whose
// detail names the violated rule.
PolyZ4 parse_poly(std::string_view text);

// Descending exponents, coefficient 1 omitted, zero rendered as "0".
std::string format_poly(const PolyZ4& p);
std::string format_poly(const PolyF2& p);

}  // namespace z4dc

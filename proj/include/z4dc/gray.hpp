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

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <utility>

#include "z4dc/code.hpp"

namespace z4dc {

// Lee weights of the symbols 1, 2, 3. Replaceable so tests can inject a faulty table.
struct LeeTable {
    int w1 = 1, w2 = 2, w3 = 1;
    int operator()(int a) const { return a == 0 ? 0 : a == 1 ? w1 : a == 2 ? w2 : w3; }
    friend bool operator==(const LeeTable&, const LeeTable&) = default;
};

int lee_weight_symbol(int a);
int lee_weight(const VecZ4& v);
int lee_distance(const VecZ4& u, const VecZ4& v);
// 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10
VecF2 gray_map(const VecZ4& v);
int hamming_distance(const VecF2& a, const VecF2& b);

using LeeEnumerator = std::map<int, std::uint64_t>;

struct EnumOptions {
    std::uint64_t cap = default_enum_cap();
    unsigned jobs = 1;
    LeeTable table{};
};

// Exact weight histogram; with jobs > 1 the index range is split into
// contiguous blocks whose histograms are added in block order.
LeeEnumerator lee_enumerator(const DoubleCyclicCode& c, const EnumOptions& opt = {});
int min_lee_distance(const DoubleCyclicCode& c, const EnumOptions& opt = {});
inline int min_lee_distance(const LeeEnumerator& e) {
    for (const auto& [w, n] : e)
        if (w > 0 && n > 0) return w;
    throw Error(ErrorKind::ZeroCode, "the zero code has no nonzero codeword");
}

// Two codewords whose Gray images XOR to a word outside the image.
struct NonlinearityWitness {
    CodeVector u, v;
    CodeVector preimage;  // u + v + 2 (u mod 2)*(v mod 2), not a codeword
};

// Uses phi(u) xor phi(v) = phi(u + v + 2 (u*v mod 2)), so the image is linear
// iff 2 (a*b) lies in the code for all residue generator pairs. Exact.
std::optional<NonlinearityWitness> nonlinearity_witness(const DoubleCyclicCode& c);
// XOR-closure of the whole Gray image; small codes only.
bool gray_image_closed_bruteforce(const DoubleCyclicCode& c, std::uint64_t cap = 1u << 16);

struct GrayParams {
    int n = 0;  // binary length 2(r + s)
    CodeSize M;
    std::optional<int> d;  // empty for the zero code
    bool linear_image = true;
    std::optional<NonlinearityWitness> witness;
};

GrayParams gray_image_params(const DoubleCyclicCode& c, const EnumOptions& opt = {});
GrayParams gray_image_params(const DoubleCyclicCode& c, const LeeEnumerator& e);

// One 0/1 string per codeword, in enumeration order.
void export_gray_image(const DoubleCyclicCode& c, std::ostream& out, std::uint64_t cap = default_enum_cap());

}  // namespace z4dc

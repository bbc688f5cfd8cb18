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

#include <random>
#include <set>
#include <vector>

#include "z4dc/code.hpp"
#include "z4dc/linalg.hpp"
#include "z4dc/poly.hpp"
#include "z4dc/ring.hpp"

namespace z4dc::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20260415);
    return g;
}

inline int rand_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline PolyZ4 rand_poly(int max_deg) {
    std::vector<std::uint8_t> c(static_cast<std::size_t>(max_deg + 1));
    for (auto& v : c) v = static_cast<std::uint8_t>(rand_int(0, 3));
    return PolyZ4(std::move(c));
}

inline VecZ4 rand_vec(std::size_t n) {
    VecZ4 v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(rand_int(0, 3));
    return v;
}

inline MatZ4 rand_mat(std::size_t rows, std::size_t cols) {
    MatZ4 m(cols);
    for (std::size_t i = 0; i < rows; ++i) m.push_row(rand_vec(cols));
    return m;
}

// Every Z4 combination of the rows; only for tiny inputs.
inline std::set<VecZ4> brute_span(const MatZ4& m) {
    std::set<VecZ4> span{VecZ4(m.ncols(), 0)};
    for (const auto& row : m.rows()) {
        std::set<VecZ4> next;
        for (const auto& v : span) {
            VecZ4 w = v;
            for (int k = 0; k < 4; ++k) {
                next.insert(w);
                w = add(w, row);
            }
        }
        span = std::move(next);
    }
    return span;
}

// Monic divisors of x^n - 1 over Z4 by trying every monic polynomial; n <= 9.
inline std::vector<PolyZ4> brute_divisors(int n) {
    const PolyZ4 mod = cyclic_modulus(n);
    std::vector<PolyZ4> out;
    for (int d = 0; d <= n; ++d) {
        std::uint64_t total = 1;
        for (int i = 0; i < d; ++i) total *= 4;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::vector<std::uint8_t> c(static_cast<std::size_t>(d + 1), 0);
            std::uint64_t t = code;
            for (int i = 0; i < d; ++i, t /= 4) c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(t % 4);
            c[static_cast<std::size_t>(d)] = 1;
            PolyZ4 p(std::move(c));
            if (rem(mod, p).is_zero()) out.push_back(std::move(p));
        }
    }
    return out;
}

// Code generated by a few random pairs (a | b), with extra weight on even and
// zero components so that every case of the classification shows up.
inline DoubleCyclicCode random_code(int r, int s) {
    std::vector<PolyPair> gens;
    const int k = rand_int(1, 3);
    for (int i = 0; i < k; ++i) {
        PolyZ4 a = rand_poly(r - 1), b = rand_poly(s - 1);
        if (rand_int(0, 3) == 0) a *= 2;
        if (rand_int(0, 3) == 0) b *= 2;
        if (rand_int(0, 4) == 0) a = {};
        if (rand_int(0, 4) == 0) b = {};
        gens.emplace_back(std::move(a), std::move(b));
    }
    return recover_code(r, s, gens);
}

inline std::pair<int, int> rand_lengths(int max_len) {
    return {2 * rand_int(0, (max_len - 1) / 2) + 1, 2 * rand_int(0, (max_len - 1) / 2) + 1};
}

}  // namespace z4dc::testing

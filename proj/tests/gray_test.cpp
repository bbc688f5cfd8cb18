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

#include <doctest.h>

#include <numeric>
#include <set>
#include <sstream>

#include "support.hpp"
#include "z4dc/error.hpp"
#include "z4dc/examples.hpp"
#include "z4dc/gray.hpp"

using namespace z4dc;
using namespace z4dc::testing;

namespace {

// Independent symbol tables.
const int lee_of[4] = {0, 1, 2, 1};
const char* const gray_of[4] = {"00", "01", "11", "10"};

std::string gray_string(const VecZ4& v) {
    std::string s;
    for (auto a : v) s += gray_of[a];
    return s;
}

std::uint64_t total(const LeeEnumerator& e) {
    std::uint64_t t = 0;
    for (const auto& [w, n] : e) t += n;
    return t;
}

}  // namespace

TEST_CASE("symbol weights and the Gray table") {
    CHECK(lee_weight_symbol(0) == 0);
    CHECK(lee_weight_symbol(1) == 1);
    CHECK(lee_weight_symbol(2) == 2);
    CHECK(lee_weight_symbol(3) == 1);
    CHECK(gray_map(VecZ4{0, 0}) == VecF2{0, 0, 0, 0});
    CHECK(gray_map(VecZ4{2}) == VecF2{1, 1});
    CHECK(gray_map(VecZ4{1, 3}) == VecF2{0, 1, 1, 0});
    CHECK(lee_weight(VecZ4{1, 1, 3, 2, 3, 0, 0, 0}) == 6);
    CHECK(lee_weight(VecZ4(10, 0)) == 0);
    CHECK_THROWS_AS(lee_distance(VecZ4{1}, VecZ4{1, 2}), Error);
    CHECK_THROWS_AS(hamming_distance(VecF2{1}, VecF2{1, 0}), Error);
}

TEST_CASE("Gray map preserves distance") {
    for (int t = 0; t < 2000; ++t) {
        const auto n = static_cast<std::size_t>(rand_int(1, 64));
        const auto u = rand_vec(n), v = rand_vec(n);
        int lee = 0;
        for (std::size_t i = 0; i < n; ++i) lee += lee_of[(u[i] + 4 - v[i]) % 4];
        const std::string gu = gray_string(u), gv = gray_string(v);
        int ham = 0;
        for (std::size_t i = 0; i < gu.size(); ++i) ham += gu[i] != gv[i];
        CHECK(lee_distance(u, v) == lee);
        CHECK(hamming_distance(gray_map(u), gray_map(v)) == ham);
        CHECK(lee == ham);
        CHECK(lee_weight(u) == lee_weight(scale(u, 3)));
    }
}

TEST_CASE("enumerator against explicit codeword lists") {
    int done = 0;
    while (done < 120) {
        const auto [r, s] = rand_lengths(9);
        const auto c = random_code(r, s);
        if (c.size().log2() > 16) continue;
        ++done;
        LeeEnumerator expect;
        for (const auto& w : enumerate_codewords(c)) ++expect[lee_weight(w.concat())];
        const auto e = lee_enumerator(c);
        CHECK(e == expect);
        CHECK(total(e) == c.size().count());
        CHECK(e.at(0) == 1);
        if (c.size().log2() > 0) {
            CHECK(min_lee_distance(c) == std::next(e.begin())->first);
            const auto p = gray_image_params(c);
            CHECK(p.n == 2 * (r + s));
            CHECK(p.M == c.size());
            CHECK(p.d == min_lee_distance(e));
        } else {
            CHECK_THROWS_AS(min_lee_distance(c), Error);
            CHECK_FALSE(gray_image_params(c).d.has_value());
        }
    }
}

TEST_CASE("parallel enumeration is bit-identical") {
    const auto c = validate(reference_spec(3));
    const auto one = lee_enumerator(c);
    for (unsigned jobs : {2u, 3u, 7u, 64u}) {
        EnumOptions o;
        o.jobs = jobs;
        CHECK(lee_enumerator(c, o) == one);
    }
    EnumOptions tiny;
    tiny.cap = 100;
    CHECK_THROWS_AS(lee_enumerator(c, tiny), Error);
}

TEST_CASE("nonlinearity witness matches the XOR closure of the image") {
    int linear = 0, nonlinear = 0;
    int done = 0;
    while (done < 200) {
        const auto [r, s] = rand_lengths(5);
        const auto c = random_code(r, s);
        if (c.size().log2() > 9) continue;
        ++done;
        const auto w = nonlinearity_witness(c);
        const bool closed = gray_image_closed_bruteforce(c);
        CHECK(closed == !w.has_value());
        (closed ? linear : nonlinear)++;
        if (w) {
            CHECK(contains(c, w->u));
            CHECK(contains(c, w->v));
            CHECK_FALSE(contains(c, w->preimage));
            const auto gu = gray_map(w->u.concat()), gv = gray_map(w->v.concat());
            VecF2 x(gu.size());
            for (std::size_t i = 0; i < x.size(); ++i) x[i] = gu[i] ^ gv[i];
            CHECK(x == gray_map(w->preimage.concat()));
        }
    }
    CHECK(linear > 10);
    CHECK(nonlinear > 10);
}

TEST_CASE("reference codes") {
    for (int id : {1, 3, 4}) {
        CAPTURE(id);
        const auto c = validate(reference_spec(id));
        const auto e = lee_enumerator(c);
        CHECK(e == reference_enumerator(id));
        CHECK(total(e) == c.size().count());
        const int n = 2 * (c.r() + c.s());
        for (const auto& [w, k] : e) CHECK(e.at(n - w) == k);
        CHECK(nonlinearity_witness(c).has_value());
    }
    const auto p1 = gray_image_params(validate(reference_spec(1)));
    CHECK(p1.n == 16);
    CHECK(p1.M.log2() == 8);
    CHECK(p1.d == 6);
    CHECK_FALSE(p1.linear_image);
    CHECK(min_lee_distance(validate(reference_spec(4))) == 12);
    CHECK(min_lee_distance(validate(reference_spec(3))) == 56);
}

TEST_CASE("a wrong Lee table breaks the example 1 check") {
    VerifyOptions good;
    for (const auto& row : verify_example(1, good)) CHECK(row.pass);
    VerifyOptions bad;
    bad.enumeration.table.w3 = 2;
    bool any_fail = false;
    for (const auto& row : verify_example(1, bad)) any_fail = any_fail || !row.pass;
    CHECK(any_fail);
}

TEST_CASE("Gray image export") {
    const auto c = validate(reference_spec(1));
    std::ostringstream os;
    export_gray_image(c, os);
    std::istringstream is(os.str());
    std::set<std::string> lines;
    std::string line;
    std::set<std::string> expect;
    for (const auto& w : enumerate_codewords(c)) expect.insert(gray_string(w.concat()));
    int count = 0;
    while (std::getline(is, line)) {
        ++count;
        CHECK(line.size() == 16);
        lines.insert(line);
    }
    CHECK(count == 256);
    CHECK(lines == expect);
}

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

#include "z4dc/poly_io.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "z4dc/error.hpp"

namespace z4dc {

namespace {

[[noreturn]] void fail(const std::string& rule, const std::string& msg) {
    throw Error(ErrorKind::ParseError, "polynomial: " + msg, rule);
}

constexpr std::size_t max_exponent = 1u << 20;

template <unsigned M>
std::string format_impl(const Poly<M>& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const unsigned c = p[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (k > 1) out += '^' + std::to_string(k);
    }
    return out;
}

}  // namespace

PolyZ4 parse_poly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail("empty-input", "empty polynomial string");

    std::vector<unsigned> acc;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t end = s.find('+', pos);
        const std::string_view term = std::string_view(s).substr(pos, end == std::string::npos ? end : end - pos);
        if (term.empty()) fail("empty-term", "empty term near offset " + std::to_string(pos));

        std::size_t i = 0;
        unsigned coeff = 1;
        bool has_coeff = false;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) ++i;
        if (i > 0) {
            if (i > 1 || term[0] > '3') fail("coefficient-range", "coefficient '" + std::string(term.substr(0, i)) + "' not in 0..3");
            coeff = static_cast<unsigned>(term[0] - '0');
            has_coeff = true;
        }
        std::size_t exponent = 0;
        if (i < term.size()) {
            if (term[i] != 'x' && term[i] != 'X') fail("term-syntax", "unexpected character '" + std::string(1, term[i]) + "'");
            ++i;
            exponent = 1;
            if (i < term.size()) {
                if (term[i] != '^') fail("term-syntax", "expected '^' after x");
                ++i;
                const auto digits = term.substr(i);
                if (digits.empty()) fail("exponent-syntax", "missing exponent after '^'");
                auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
                if (ec != std::errc{} || ptr != digits.data() + digits.size())
                    fail("exponent-syntax", "bad exponent '" + std::string(digits) + "'");
                if (exponent > max_exponent) fail("exponent-range", "exponent too large");
            }
        } else if (!has_coeff) {
            fail("term-syntax", "empty term");
        }
        if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
        acc[exponent] = (acc[exponent] + coeff) % 4;

        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return PolyZ4(std::vector<std::uint8_t>(acc.begin(), acc.end()));
}

std::string format_poly(const PolyZ4& p) { return format_impl(p); }
std::string format_poly(const PolyF2& p) { return format_impl(p); }

}  // namespace z4dc

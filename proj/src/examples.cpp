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

#include "z4dc/examples.hpp"

#include <sstream>

#include "z4dc/dual.hpp"
#include "z4dc/poly_io.hpp"

namespace z4dc {

namespace {

const char* const ex3_f2 =
    "x^56+2x^55+3x^54+2x^53+3x^52+2x^51+2x^50+3x^49+x^48+x^45+2x^43+x^41+2x^40+2x^39+x^38+x^36+3x^35+"
    "2x^34+3x^33+x^32+2x^31+3x^28+x^27+x^26+2x^25+x^24+2x^22+3x^19+3x^18+x^16+x^14+x^13+3x^12+2x^11+"
    "3x^9+3x^8+3x^7+3x^6+3x^4+3x^3+x^2+x+1";

CodeSpec second_only(int r, int s, const char* l, const char* f2) {
    CodeSpec sp;
    sp.r = r;
    sp.s = s;
    sp.l = parse_poly(l);
    sp.f2 = parse_poly(f2);
    sp.g2 = sp.f2;
    return sp;
}

void check_id(int id) {
    if (id < 1 || id > reference_example_count)
        throw Error(ErrorKind::ParseError, "no reference example " + std::to_string(id), "example-id");
}

std::string show(const LeeEnumerator& e) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [w, n] : e) {
        os << (first ? "" : ", ") << w << ':' << n;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string show(const GrayParams& p) {
    std::ostringstream os;
    os << '(' << p.n << ", 2^" << p.M.log2() << ", ";
    if (p.d) os << *p.d;
    else os << '-';
    os << ')';
    return os.str();
}

std::string show_size(const CodeSize& s) { return "2^" + std::to_string(s.log2()); }

struct Rows {
    int id;
    std::vector<VerificationRow> rows;
    void add(std::string claim, std::string expected, std::string actual, std::string note = {}) {
        const bool pass = expected == actual;
        rows.push_back({id, std::move(claim), std::move(expected), std::move(actual), pass, std::move(note)});
    }
    void add_bool(std::string claim, bool ok, std::string note = {}) {
        add(std::move(claim), "true", ok ? "true" : "false", std::move(note));
    }
};

// Examples 1-4: size, distance, Gray parameters, enumerator, nonlinearity.
void verify_gray_example(Rows& out, const DoubleCyclicCode& c, int q, int d, const VerifyOptions& opt,
                         const std::string& enum_note) {
    const LeeEnumerator e = lee_enumerator(c, opt.enumeration);
    const GrayParams p = gray_image_params(c, e);
    out.add("size", show_size(CodeSize{q, 0}), show_size(c.size()));
    out.add("min Lee distance", std::to_string(d), p.d ? std::to_string(*p.d) : "none");
    GrayParams expect;
    expect.n = 2 * (c.r() + c.s());
    expect.M = CodeSize{q, 0};
    expect.d = d;
    out.add("Gray image parameters", show(expect), show(p));
    out.add("Lee weight enumerator", show(reference_enumerator(out.id)), show(e), enum_note);
    std::string wnote;
    if (p.witness) {
        wnote = "phi(u) xor phi(v) = phi(" + format_poly(tau(p.witness->preimage).first) + " | " +
                format_poly(tau(p.witness->preimage).second) + "), not a codeword";
    }
    out.add_bool("Gray image nonlinear", !p.linear_image, wnote);
}

}  // namespace

CodeSpec reference_spec(int id) {
    check_id(id);
    switch (id) {
        case 1: return second_only(1, 7, "1", "x^3+2x^2+x+3");
        case 2: return second_only(1, 23, "1", "x^11+3x^10+2x^7+x^6+x^5+x^4+x^2+2x+3");
        case 3: return second_only(3, 63, "1+x+x^2", ex3_f2);
        case 4: return second_only(1, 15, "1", "1+2x+x^2+2x^3+3x^5+3x^6+3x^8+x^9+x^10");
        default: {
            CodeSpec sp;
            sp.r = 3;
            sp.s = 9;
            sp.f1 = sp.g1 = parse_poly("x^2+x+1");
            sp.l = parse_poly("x+1");
            sp.f2 = sp.g2 = parse_poly("x^6+x^3+1");
            return sp;
        }
    }
}

std::string reference_title(int id) {
    check_id(id);
    static const char* const titles[] = {
        "Kerdock code K(3), length (1,7)",
        "length (1,23), Gray image (48, 2^24, 12)",
        "length (3,63), Gray image (132, 2^14, 56)",
        "length (1,15), Gray image (32, 2^10, 12)",
        "free code of length (3,9) and its dual",
    };
    return titles[id - 1];
}

LeeEnumerator reference_enumerator(int id) {
    check_id(id);
    switch (id) {
        case 1: return {{0, 1}, {6, 112}, {8, 30}, {10, 112}, {16, 1}};
        case 2:
            return {{0, 1},          {12, 12144},    {14, 61824},   {16, 195063},  {18, 1133440},
                    {20, 1445136},   {22, 4080384},  {24, 2921232}, {26, 4080384}, {28, 1445136},
                    {30, 1133440},   {32, 195063},   {34, 61824},   {36, 12144},   {48, 1}};
        case 3:
            return {{0, 1},     {56, 1260}, {58, 2016}, {60, 756},  {64, 2079}, {66, 4160},
                    {68, 2079}, {72, 756},  {74, 2016}, {76, 1260}, {132, 1}};
        case 4: return {{0, 1}, {12, 240}, {16, 542}, {20, 240}, {32, 1}};
        default: return {};
    }
}

std::vector<VerificationRow> verify_example(int id, const VerifyOptions& opt) {
    check_id(id);
    Rows out{id, {}};
    const DoubleCyclicCode c = validate(reference_spec(id));
    switch (id) {
        case 1: {
            // Reference generator matrix.
            const MatZ4 g(8, {VecZ4{1, 1, 3, 2, 3, 0, 0, 0}, VecZ4{1, 0, 1, 3, 2, 3, 0, 0},
                              VecZ4{1, 0, 0, 1, 3, 2, 3, 0}, VecZ4{1, 0, 0, 0, 1, 3, 2, 3}});
            out.add_bool("generator matrix G", generator_matrix(c) == g);
            verify_gray_example(out, c, 4, 6, opt,
                                "counts-only reading: weights 0,6,8,10,16 (the reference exponent pairs do not sum to 16)");
            break;
        }
        case 2: verify_gray_example(out, c, 12, 12, opt, "all 15 terms"); break;
        case 3: verify_gray_example(out, c, 7, 56, opt, "all 11 terms"); break;
        case 4: verify_gray_example(out, c, 5, 12, opt, "all 5 terms"); break;
        default: {
            out.add("size", "2^8", show_size(c.size()));
            const auto gens = minimal_generating_set(c);
            int count[5] = {0, 0, 0, 0, 0};
            for (const auto& g : gens) ++count[g.family];
            out.add("generating set sizes S1,S2,S3,S4", "1,0,3,0",
                    std::to_string(count[1]) + "," + std::to_string(count[2]) + "," + std::to_string(count[3]) + "," +
                        std::to_string(count[4]));
            const DualReport rep = dual_free(c);
            out.add("F1_hat", "absent (F1_hat* = 0 mod x^3-1)",
                    rep.F1_hat_absent ? "absent (F1_hat* = 0 mod x^3-1)" : format_poly(rep.F1_hat));
            out.add("F2_hat*", "x+3", rep.F2_hat_star ? format_poly(*rep.F2_hat_star) : "none");
            out.add("nu", "x+1", rep.nu ? format_poly(*rep.nu) : "none");
            out.add("l_hat", "3x^2+1", format_poly(rep.l_hat));
            out.add("l_hat*", "x^2+3", format_poly(reciprocal(rep.l_hat)));
            const MatZ4 expected_dual = double_circulant({{parse_poly("x^2+3"), parse_poly("x+3")}}, 3, 9);
            out.add_bool("dual equals (x^2-1 | x-1)", span_equal(generator_matrix(rep.dual), expected_dual));
            out.add_bool("closed form equals kernel", rep.kernel_agrees.value_or(false));
            out.add("dual size", "2^16", show_size(rep.size));
            break;
        }
    }
    return out.rows;
}

std::vector<VerificationRow> verify_examples(std::optional<int> only, const VerifyOptions& opt) {
    if (only) return verify_example(*only, opt);
    std::vector<VerificationRow> all;
    for (int id = 1; id <= reference_example_count; ++id) {
        auto rows = verify_example(id, opt);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
}

}  // namespace z4dc

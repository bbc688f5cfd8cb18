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

#include "support.hpp"
#include "z4dc/code.hpp"
#include "z4dc/error.hpp"
#include "z4dc/poly_io.hpp"

using namespace z4dc;
using namespace z4dc::testing;

namespace {

PolyZ4 P(const char* s) { return parse_poly(s); }

CodeSpec kerdock_spec() { return CodeSpec{1, 7, {}, {}, P("1"), P("x^3+2x^2+x+3"), P("x^3+2x^2+x+3")}; }

CodeSpec free_3_9_spec() {
    return CodeSpec{3, 9, P("x^2+x+1"), P("x^2+x+1"), P("x+1"), P("x^6+x^3+1"), P("x^6+x^3+1")};
}

ErrorKind kind_of(const CodeSpec& sp) {
    try {
        validate(sp);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::Internal;
}

std::set<VecZ4> enumerated_set(const DoubleCyclicCode& c) {
    std::set<VecZ4> out;
    for (const auto& v : enumerate_codewords(c)) out.insert(v.concat());
    return out;
}

// All pairs g | f of monic divisors of x^n - 1.
std::vector<std::pair<PolyZ4, PolyZ4>> chains(int n) {
    std::vector<std::pair<PolyZ4, PolyZ4>> out;
    const auto ds = brute_divisors(n);
    for (const auto& f : ds)
        for (const auto& g : ds)
            if (divides(g, f)) out.emplace_back(f, g);
    return out;
}

std::vector<PolyZ4> all_polys(int max_deg) {
    std::vector<PolyZ4> out;
    std::uint64_t total = 1;
    for (int i = 0; i <= max_deg; ++i) total *= 4;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> c(static_cast<std::size_t>(max_deg + 1));
        std::uint64_t t = code;
        for (auto& v : c) {
            v = static_cast<std::uint8_t>(t % 4);
            t /= 4;
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

}  // namespace

TEST_CASE("shift, tau and the x action") {
    const CodeVector zero{{0, 0, 0}, {0, 0}};
    CHECK(shift_T(zero) == zero);
    const CodeVector v{{1, 2, 3}, {0, 1}};
    CHECK(shift_T(v) == CodeVector{{3, 1, 2}, {1, 0}});
    CodeVector w = v;
    for (int i = 0; i < 6; ++i) w = shift_T(w);
    CHECK(w == v);

    const CodeVector u{{1, 3, 2}, {0, 1}};
    CHECK(tau(u) == PolyPair{P("1+3x+2x^2"), P("x")});
    CHECK(tau_inv(tau(u), 3, 2) == u);
    CHECK_THROWS_AS(tau_inv({P("x^3"), {}}, 3, 2), Error);

    for (int trial = 0; trial < 300; ++trial) {
        const auto [r, s] = rand_lengths(15);
        const CodeVector x{rand_vec(static_cast<std::size_t>(r)), rand_vec(static_cast<std::size_t>(s))};
        CHECK(tau(shift_T(x)) == xstar_mul(P("x"), tau(x), r, s));
    }
    CHECK(xstar_mul(PolyZ4{1}, {P("x+1"), P("2x")}, 3, 5) == PolyPair{P("x+1"), P("2x")});
    CHECK(xstar_mul(P("x^5"), {P("x+1"), P("2x")}, 5, 5) == PolyPair{P("x+1"), P("2x")});
}

TEST_CASE("x^s-1 over g2 kills the second component") {
    const auto c = validate(kerdock_spec());
    const auto out = xstar_mul(exact_div(cyclic_modulus(7), c.g2()), {c.l(), c.F2()}, 1, 7);
    CHECK(out.second.is_zero());
    CHECK(out.first == reduce_cyclic(exact_div(cyclic_modulus(7), c.g2()) * c.l(), 1));
}

TEST_CASE("validate") {
    const auto k = validate(kerdock_spec());
    CHECK(k.code_case() == CodeCase::second_only);
    CHECK_FALSE(k.first_present());

    const auto f = validate(free_3_9_spec());
    CHECK(f.code_case() == CodeCase::both);
    CHECK(f.is_free());

    // l = x^2 reduces modulo x + 3 + 2 = x + 1 to 1
    const auto n = validate(CodeSpec{3, 3, P("x+3"), P("1"), P("x^2"), P("1"), P("1")});
    CHECK(n.l() == PolyZ4{1});
    CHECK(n.l_was_reduced());
    CHECK(n.code_case() == CodeCase::both);
    CHECK(n.size() == CodeSize{5, 1});

    CHECK(kind_of(CodeSpec{2, 7, {}, {}, P("1"), P("x+3"), P("x+3")}) == ErrorKind::EvenLength);
    CHECK(kind_of(CodeSpec{1, 7, {}, {}, P("1"), P("x^2+1"), P("x^2+1")}) == ErrorKind::DivisibilityChainBroken);
    CHECK(kind_of(CodeSpec{1, 7, {}, {}, P("1"), P("x+3"), P("x^3+2x^2+x+3")}) ==
          ErrorKind::DivisibilityChainBroken);
    CHECK(kind_of(CodeSpec{3, 3, P("x+3"), {}, {}, {}, {}}) == ErrorKind::DegenerateGenerators);
    CHECK(kind_of(CodeSpec{3, 3, {}, {}, P("x"), {}, {}}) == ErrorKind::DegenerateGenerators);
    CHECK(kind_of(CodeSpec{3, 3, P("3x+1"), P("1"), {}, {}, {}}) == ErrorKind::DegenerateGenerators);
    // (x^3-1)/(x+3) * 1 is not in the zero ideal
    CHECK(kind_of(CodeSpec{3, 3, {}, {}, P("1"), P("x+3"), P("x+3")}) == ErrorKind::IdealConditionViolation);
    // passes the first condition but not the torsion one
    CHECK(kind_of(CodeSpec{3, 3, P("x^2+x+1"), P("x^2+x+1"), P("1"), P("x^2+x+1"), P("1")}) ==
          ErrorKind::IdealConditionViolation);
    try {
        validate(CodeSpec{1, 7, {}, {}, P("1"), P("x^2+1"), P("x^2+1")});
    } catch (const Error& e) {
        CHECK(e.detail() == "f2|x^s-1");
    }
}

TEST_CASE("minimal generating sets") {
    const auto k = validate(kerdock_spec());
    const auto g = generator_matrix(k);
    const std::vector<VecZ4> expected{{1, 1, 3, 2, 3, 0, 0, 0},
                                      {1, 0, 1, 3, 2, 3, 0, 0},
                                      {1, 0, 0, 1, 3, 2, 3, 0},
                                      {1, 0, 0, 0, 1, 3, 2, 3}};
    CHECK(g.rows() == expected);
    CHECK(k.size() == CodeSize{4, 0});

    const auto f = minimal_generating_set(validate(free_3_9_spec()));
    REQUIRE(f.size() == 4);
    CHECK(f[0].family == 1);
    for (std::size_t i = 1; i < 4; ++i) CHECK(f[i].family == 3);
    for (const auto& row : f) CHECK(row.order == 4);
    CHECK(tau(f[0].v) == PolyPair{P("3x^2+3x+3"), {}});

    // f = x^r-1, g = 1 on both sides: only order-2 rows
    const auto t = validate(CodeSpec{3, 5, cyclic_modulus(3), P("1"), {}, cyclic_modulus(5), P("1")});
    const auto rows = minimal_generating_set(t);
    CHECK(std::count_if(rows.begin(), rows.end(), [](auto& x) { return x.family == 2; }) == 3);
    CHECK(std::count_if(rows.begin(), rows.end(), [](auto& x) { return x.family == 4; }) == 5);
    CHECK(rows.size() == 8);
    CHECK(t.size() == CodeSize{0, 8});
}

TEST_CASE("a redundant row in the generating set") {
    // (2|0) = 2 (1|2): the second-family row is a multiple of the fourth-family row.
    const auto c = validate(CodeSpec{1, 1, P("x+3"), P("1"), P("1"), P("x+3"), P("1")});
    const auto rows = minimal_generating_set(c);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].v == CodeVector{{2}, {0}});
    CHECK(rows[1].v == CodeVector{{1}, {2}});
    CHECK(c.size().count() == 4);
    CHECK(howell(MatZ4(2, {rows[1].v.concat()})).log2_size() == 2);
}

TEST_CASE("code sizes") {
    CHECK(validate(kerdock_spec()).size().count() == 256);
    CHECK(validate(CodeSpec{3, 5, P("1"), P("1"), {}, P("1"), P("1")}).size() == CodeSize{8, 0});
    CHECK(validate(CodeSpec{3, 5}).size().count() == 1);
}

TEST_CASE("enumeration") {
    const auto zero = validate(CodeSpec{3, 5});
    const auto words = enumerate_codewords(zero);
    REQUIRE(words.size() == 1);
    CHECK(words[0] == CodeVector{{0, 0, 0}, {0, 0, 0, 0, 0}});

    CHECK(enumerated_set(validate(kerdock_spec())).size() == 256);

    const auto big = validate(CodeSpec{15, 15, P("1"), P("1"), {}, P("1"), P("1")});
    CHECK_THROWS_AS(CodewordEnumerator{big}, Error);
    CHECK_THROWS_AS(CodewordEnumerator(validate(kerdock_spec()), 100), Error);

    // contiguous ranges concatenate to the full stream; at() agrees with for_each
    const auto c = validate(free_3_9_spec());
    const CodewordEnumerator e(c);
    std::vector<VecZ4> full, parts;
    e.for_each(0, e.count(), [&](const PackedWord& w) { full.push_back(e.unpack(w).concat()); });
    for (std::uint64_t b = 0; b < e.count(); b += 37)
        e.for_each(b, std::min(e.count(), b + 37), [&](const PackedWord& w) { parts.push_back(e.unpack(w).concat()); });
    CHECK(full == parts);
    for (std::uint64_t i = 0; i < e.count(); i += 19) CHECK(e.unpack(e.at(i)).concat() == full[i]);
}

TEST_CASE("random codes: size formula, enumeration, Howell span, closure, minimality") {
    for (int trial = 0; trial < 250;) {
        const auto [r, s] = rand_lengths(7);
        const auto c = random_code(r, s);
        if (c.size().log2() > 14) continue;
        ++trial;
        const auto g = generator_matrix(c);
        const auto h = howell(g);
        const auto set = enumerated_set(c);
        CHECK(static_cast<std::size_t>(c.size().log2()) == h.log2_size());
        CHECK(set.size() == c.size().count());
        CHECK(set == brute_span(h.matrix()));
        for (const auto& v : set) CHECK(h.contains(shift_T(CodeVector::split(v, r, s)).concat()));
        // The set is minimal exactly when every order-2 tag is the true order,
        // i.e. when 2 h2 l vanishes (or the fourth family is empty).
        const bool torsion_free = c.r1() == c.r2() || reduce_cyclic(2 * c.h2() * c.l(), r).is_zero();
        bool minimal = true;
        for (std::size_t drop = 0; drop < g.nrows(); ++drop) {
            MatZ4 less(g.ncols());
            for (std::size_t i = 0; i < g.nrows(); ++i)
                if (i != drop) less.push_row(g.row(i));
            minimal = minimal && howell(less).log2_size() < h.log2_size();
        }
        CHECK(minimal == torsion_free);
        for (const auto& row : minimal_generating_set(c)) CHECK(contains(c, row.v));
        CHECK(contains(c, CodeVector{VecZ4(static_cast<std::size_t>(r), 0), VecZ4(static_cast<std::size_t>(s), 0)}));
    }
}

TEST_CASE("membership rejects non-members") {
    int rejected = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = random_code(3, 5);
        const auto set = enumerated_set(c);
        const VecZ4 v = rand_vec(8);
        CHECK(contains(c, CodeVector::split(v, 3, 5)) == (set.count(v) == 1));
        rejected += set.count(v) == 0;
    }
    CHECK(rejected > 0);
}

TEST_CASE("validation is exactly the condition for the size formula") {
    // Over every chain pair and every l of degree < r, validate accepts iff the
    // literal generators (F1|0), (l|F2) span a code of the formula's size.
    for (const auto& [r, s] : std::vector<std::pair<int, int>>{{1, 3}, {3, 3}, {3, 5}, {1, 7}}) {
        const auto ch1 = chains(r), ch2 = chains(s);
        const auto ls = all_polys(r - 1);
        int accepted = 0, rejected = 0;
        for (const auto& [f1, g1] : ch1)
            for (const auto& [f2, g2] : ch2)
                for (const auto& l : ls) {
                    const PolyPair first{f1 + 2 * g1, {}}, second{l, f2 + 2 * g2};
                    const auto actual = howell(double_circulant({first, second}, r, s));
                    const int formula = 2 * (r + s - f1.degree() - f2.degree()) + f1.degree() + f2.degree() -
                                        g1.degree() - g2.degree();
                    bool ok = true;
                    try {
                        const auto c = validate(CodeSpec{r, s, f1, g1, l, f2, g2});
                        CHECK(howell(generator_matrix(c)) == actual);
                    } catch (const Error& e) {
                        CHECK(e.kind() == ErrorKind::IdealConditionViolation);
                        ok = false;
                    }
                    CHECK(ok == (static_cast<int>(actual.log2_size()) == formula));
                    (ok ? accepted : rejected)++;
                }
        CHECK(accepted > 0);
        if (r > 1) CHECK(rejected > 0);
    }
}

TEST_CASE("reducing l modulo F1 leaves the code unchanged") {
    for (int trial = 0; trial < 200; ++trial) {
        const auto [r, s] = rand_lengths(7);
        const auto c = random_code(r, s);
        const int i = rand_int(0, r);
        const PolyZ4 moved = c.l() + c.F1().shifted(static_cast<std::size_t>(i)) * rand_int(1, 3);
        const auto a = double_circulant({{c.F1(), {}}, {c.l(), c.F2()}}, r, s);
        const auto b = double_circulant({{c.F1(), {}}, {moved, c.F2()}}, r, s);
        CHECK(span_equal(a, b));
        // the (x^s-1)/g2 multiple of (l|F2) is a codeword with zero right part
        const auto w = xstar_mul(exact_div(cyclic_modulus(s), c.g2()), {c.l(), c.F2()}, r, s);
        CHECK(w.second.is_zero());
        CHECK(contains(c, tau_inv(w, r, s)));
    }
}

TEST_CASE("canonicalize_ideal") {
    const auto z = canonicalize_ideal({PolyZ4{}}, 5);
    CHECK(z.first == cyclic_modulus(5));
    CHECK(z.second == cyclic_modulus(5));
    const auto u = canonicalize_ideal({P("3")}, 5);
    CHECK(u == std::pair{PolyZ4{1}, PolyZ4{1}});
    const std::vector<PolyZ4> gens{P("2x+2"), P("x+3") * P("x^2+x+1")};
    const auto [f, g] = canonicalize_ideal(gens, 3);
    CHECK(span_equal(circulant({f + 2 * g}, 3), circulant(gens, 3)));
    CHECK(f == cyclic_modulus(3));
    CHECK(g == P("x+3"));

    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 * rand_int(0, 7) + 1;
        std::vector<PolyZ4> span;
        for (int k = rand_int(1, 3); k > 0; --k) {
            PolyZ4 p = rand_poly(n - 1);
            if (rand_int(0, 2) == 0) p *= 2;
            span.push_back(p);
        }
        const auto [ff, gg] = canonicalize_ideal(span, n);
        CHECK(ff.is_monic());
        CHECK(gg.is_monic());
        CHECK(divides(gg, ff));
        CHECK(divides(ff, cyclic_modulus(n)));
        CHECK(span_equal(circulant({ff + 2 * gg}, n), circulant(span, n)));
    }
}

TEST_CASE("recovery from arbitrary generators") {
    // fails validation, recovered as a code with the same span
    const std::vector<PolyPair> gens{{P("1"), P("x+3")}};
    const auto c = recover_code(3, 3, gens);
    CHECK(span_equal(generator_matrix(c), double_circulant(gens, 3, 3)));
    CHECK(c.first_present());

    for (int trial = 0; trial < 200; ++trial) {
        const auto [r, s] = rand_lengths(9);
        std::vector<PolyPair> g;
        for (int k = rand_int(1, 3); k > 0; --k) g.emplace_back(rand_poly(r - 1) * rand_int(1, 2), rand_poly(s - 1));
        const auto rc = recover_code(r, s, g);
        CHECK(span_equal(generator_matrix(rc), double_circulant(g, r, s)));
    }
    MatZ4 not_cyclic(4, {VecZ4{1, 0, 1, 0}});
    CHECK_THROWS_AS(code_from_span(3, 1, not_cyclic), Error);
}

TEST_CASE("residue code") {
    const auto c = validate(free_3_9_spec());
    const auto b = residue_code(c);
    CHECK(b.F1 == reduce_mod2(P("x^2+x+1")));
    CHECK(b.l == reduce_mod2(P("x+1")));
    CHECK(b.F2 == reduce_mod2(P("x^6+x^3+1")));

    const auto t = residue_code(validate(CodeSpec{3, 3, cyclic_modulus(3), P("1"), {}, {}, {}}));
    CHECK(t.F1.is_zero());
    CHECK(t.dimension() == 0);

    for (int trial = 0; trial < 200;) {
        const auto [r, s] = rand_lengths(7);
        const auto rc = random_code(r, s);
        if (rc.size().log2() > 16) continue;
        ++trial;
        std::set<VecF2> residues;
        for (const auto& v : enumerate_codewords(rc)) {
            VecF2 w = v.concat();
            for (auto& x : w) x &= 1;
            residues.insert(w);
        }
        const auto bc = residue_code(rc);
        CHECK(residues.size() == (std::size_t{1} << bc.dimension()));
        for (const auto& w : residues) CHECK(bc.contains(w));
    }
}

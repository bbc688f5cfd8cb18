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

#include "z4dc/code.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "z4dc/poly_io.hpp"

namespace z4dc {

namespace {

void require_odd_length(int n, const char* name) {
    if (n < 1 || n % 2 == 0)
        throw Error(ErrorKind::EvenLength,
                    std::string(name) + " must be a positive odd integer, got " + std::to_string(n));
}

VecZ4 coeff_vector(const PolyZ4& p, int n) {
    VecZ4 v(static_cast<std::size_t>(n), 0);
    for (int i = 0; i <= p.degree() && i < n; ++i) v[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i)];
    return v;
}

PolyZ4 poly_of(VecZ4::const_iterator first, VecZ4::const_iterator last) {
    return PolyZ4(std::vector<std::uint8_t>(first, last));
}

PolyF2 poly_f2_of(const VecF2& v) { return PolyF2(std::vector<std::uint8_t>(v.begin(), v.end())); }

int lcm_len(int r, int s) { return std::lcm(r, s); }

}  // namespace

VecZ4 CodeVector::concat() const {
    VecZ4 out = left;
    out.insert(out.end(), right.begin(), right.end());
    return out;
}

CodeVector CodeVector::split(const VecZ4& v, int r, int s) {
    if (v.size() != static_cast<std::size_t>(r + s))
        throw Error(ErrorKind::DimensionMismatch, "vector length differs from r + s");
    return {VecZ4(v.begin(), v.begin() + r), VecZ4(v.begin() + r, v.end())};
}

CodeVector shift_T(const CodeVector& v) {
    CodeVector out = v;
    if (!out.left.empty()) std::rotate(out.left.rbegin(), out.left.rbegin() + 1, out.left.rend());
    if (!out.right.empty()) std::rotate(out.right.rbegin(), out.right.rbegin() + 1, out.right.rend());
    return out;
}

PolyPair tau(const CodeVector& v) {
    return {poly_of(v.left.begin(), v.left.end()), poly_of(v.right.begin(), v.right.end())};
}

CodeVector tau_inv(const PolyPair& p, int r, int s) {
    if (p.first.degree() >= r || p.second.degree() >= s)
        throw Error(ErrorKind::DegreeOverflow, "polynomial degree exceeds block length");
    return {coeff_vector(p.first, r), coeff_vector(p.second, s)};
}

PolyPair xstar_mul(const PolyZ4& p, const PolyPair& pair, int r, int s) {
    return {mul_mod_cyclic(p, pair.first, r), mul_mod_cyclic(p, pair.second, s)};
}

std::string to_string(CodeCase c) {
    switch (c) {
        case CodeCase::first_only: return "i";
        case CodeCase::second_only: return "ii";
        case CodeCase::both: return "iii";
    }
    return "?";
}

std::uint64_t CodeSize::count() const {
    if (log2() >= 64) throw Error(ErrorKind::EnumerationCapExceeded, "code size does not fit in 64 bits");
    return std::uint64_t{1} << log2();
}

CodeCase DoubleCyclicCode::code_case() const noexcept {
    if (second_ && first_) return CodeCase::both;
    if (second_) return CodeCase::second_only;
    return CodeCase::first_only;
}

CodeSize DoubleCyclicCode::size() const {
    // Absent generators carry degree r (or s), so their terms vanish.
    return {r_ + s_ - t1() - r1(), t1() + r1() - t2() - r2()};
}

CodeSpec DoubleCyclicCode::spec() const {
    CodeSpec sp;
    sp.r = r_;
    sp.s = s_;
    if (first_) {
        sp.f1 = f1_;
        sp.g1 = g1_;
    }
    if (second_) {
        sp.l = l_;
        sp.f2 = f2_;
        sp.g2 = g2_;
    }
    return sp;
}

bool ideal_contains(const PolyZ4& f, const PolyZ4& g, const PolyZ4& p, int n) {
    const PolyZ4 rest = rem(reduce_cyclic(p, n), f);
    std::vector<std::uint8_t> half;
    for (auto c : rest.coeffs()) {
        if (c % 2 != 0) return false;
        half.push_back(static_cast<std::uint8_t>(c / 2));
    }
    return divides(reduce_mod2(g), PolyF2(std::move(half)));
}

DoubleCyclicCode validate(const CodeSpec& sp) {
    require_odd_length(sp.r, "r");
    require_odd_length(sp.s, "s");
    const int r = sp.r, s = sp.s;
    const PolyZ4 mr = cyclic_modulus(r), ms = cyclic_modulus(s);

    if (sp.f1.has_value() != sp.g1.has_value())
        throw Error(ErrorKind::DegenerateGenerators, "first generator needs both f1 and g1", "first-incomplete");
    if (sp.f2.has_value() != sp.g2.has_value())
        throw Error(ErrorKind::DegenerateGenerators, "second generator needs both f2 and g2", "second-incomplete");
    if (!sp.f2 && sp.l && !reduce_cyclic(*sp.l, r).is_zero())
        throw Error(ErrorKind::DegenerateGenerators, "l given without f2 and g2", "l-without-second");

    DoubleCyclicCode c;
    c.r_ = r;
    c.s_ = s;
    c.f1_ = sp.f1.value_or(mr);
    c.g1_ = sp.g1.value_or(mr);
    c.f2_ = sp.f2.value_or(ms);
    c.g2_ = sp.g2.value_or(ms);

    const std::pair<const char*, const PolyZ4*> named[] = {
        {"f1", &c.f1_}, {"g1", &c.g1_}, {"f2", &c.f2_}, {"g2", &c.g2_}};
    for (const auto& [name, p] : named)
        if (!p->is_monic())
            throw Error(ErrorKind::DegenerateGenerators, std::string(name) + " = " + format_poly(*p) + " is not monic",
                        std::string(name) + "-not-monic");

    if (!divides(c.g1_, c.f1_))
        throw Error(ErrorKind::DivisibilityChainBroken, "g1 does not divide f1", "g1|f1");
    if (!divides(c.f1_, mr))
        throw Error(ErrorKind::DivisibilityChainBroken, "f1 does not divide x^r-1", "f1|x^r-1");
    if (!divides(c.g2_, c.f2_))
        throw Error(ErrorKind::DivisibilityChainBroken, "g2 does not divide f2", "g2|f2");
    if (!divides(c.f2_, ms))
        throw Error(ErrorKind::DivisibilityChainBroken, "f2 does not divide x^s-1", "f2|x^s-1");

    c.first_ = !(c.f1_ == mr && c.g1_ == mr);
    c.second_ = !(c.f2_ == ms && c.g2_ == ms);

    const PolyZ4 l_in = sp.l.value_or(PolyZ4{});
    PolyZ4 l = rem(reduce_cyclic(l_in, r), c.F1());

    const PolyZ4 q = reduce_cyclic(exact_div(ms, c.g2_) * l, r);
    if (!ideal_contains(c.f1_, c.g1_, q, r))
        throw Error(ErrorKind::IdealConditionViolation,
                    "((x^s-1)/g2) l is not in the ideal of f1+2g1; remainder " + format_poly(rem(q, c.f1_)), "l-ideal");
    // (2 h2 l | 0) is always a codeword; it must already lie in the first ideal.
    const PolyZ4 t = reduce_cyclic(2 * c.h2() * l, r);
    if (!ideal_contains(c.f1_, c.g1_, t, r))
        throw Error(ErrorKind::IdealConditionViolation,
                    "2 h2 l is not in the ideal of f1+2g1; remainder " + format_poly(rem(t, c.f1_)), "torsion");

    if (!c.second_) l = PolyZ4{};  // (l|0) lies in the first ideal already
    c.l_reduced_ = l != l_in;
    c.l_ = std::move(l);
    return c;
}

std::vector<GeneratorRow> minimal_generating_set(const DoubleCyclicCode& c) {
    const int r = c.r(), s = c.s();
    std::vector<GeneratorRow> out;
    auto emit = [&](const PolyZ4& a, const PolyZ4& b, int count, int order, int family) {
        for (int i = 0; i < count; ++i) {
            const auto x = PolyZ4::monomial(static_cast<std::size_t>(i));
            out.push_back({tau_inv(xstar_mul(x, {a, b}, r, s), r, s), order, family});
        }
    };
    emit(c.F1(), {}, r - c.t1(), 4, 1);
    emit(2 * c.h1() * c.g1(), {}, c.t1() - c.t2(), 2, 2);
    emit(c.l(), c.F2(), s - c.r1(), 4, 3);
    emit(c.h2() * c.l(), 2 * c.h2() * c.g2(), c.r1() - c.r2(), 2, 4);
    return out;
}

MatZ4 generator_matrix(const DoubleCyclicCode& c) {
    MatZ4 m(static_cast<std::size_t>(c.r() + c.s()));
    for (const auto& g : minimal_generating_set(c)) m.push_row(g.v.concat());
    return m;
}

bool contains(const DoubleCyclicCode& c, const CodeVector& v) {
    if (v.left.size() != static_cast<std::size_t>(c.r()) || v.right.size() != static_cast<std::size_t>(c.s()))
        throw Error(ErrorKind::DimensionMismatch, "vector blocks do not match (r, s)");
    return howell(generator_matrix(c)).contains(v.concat());
}

MatZ4 circulant(const std::vector<PolyZ4>& polys, int n) {
    MatZ4 m(static_cast<std::size_t>(n));
    for (const auto& p : polys) {
        PolyZ4 cur = reduce_cyclic(p, n);
        if (cur.is_zero()) continue;
        for (int i = 0; i < n; ++i) {
            m.push_row(coeff_vector(cur, n));
            cur = reduce_cyclic(cur.shifted(1), n);
        }
    }
    return m;
}

MatZ4 double_circulant(const std::vector<PolyPair>& pairs, int r, int s) {
    MatZ4 m(static_cast<std::size_t>(r + s));
    const int k = lcm_len(r, s);
    for (const auto& pr : pairs) {
        CodeVector v = tau_inv({reduce_cyclic(pr.first, r), reduce_cyclic(pr.second, s)}, r, s);
        for (int i = 0; i < k; ++i) {
            m.push_row(v.concat());
            v = shift_T(v);
        }
    }
    return m;
}

std::pair<PolyZ4, PolyZ4> canonicalize_ideal(const std::vector<PolyZ4>& spanning, int n) {
    require_odd_length(n, "n");
    const PolyZ4 mod = cyclic_modulus(n);
    const HowellForm h = howell(circulant(spanning, n));
    if (h.rank_rows() == 0) return {mod, mod};

    PolyF2 fbar = cyclic_modulus_f2(n);
    for (const auto& p : spanning) fbar = gcd_f2(fbar, reduce_mod2(reduce_cyclic(p, n)));

    // Residues of {t : 2t in I}: the residue ideal itself plus halves of the
    // even combinations of the Howell rows.
    const auto& rows = h.matrix().rows();
    std::vector<VecF2> bar;
    for (const auto& row : rows) {
        VecF2 b(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) b[j] = row[j] & 1;
        bar.push_back(std::move(b));
    }
    PolyF2 gbar = fbar;
    for (const auto& a : left_nullspace_f2(bar, static_cast<std::size_t>(n))) {
        VecZ4 comb(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i]) comb = add(comb, rows[i]);
        VecF2 half(comb.size());
        for (std::size_t j = 0; j < comb.size(); ++j) {
            if (comb[j] % 2 != 0) throw Error(ErrorKind::Internal, "odd entry in a null combination");
            half[j] = comb[j] / 2;
        }
        gbar = gcd_f2(gbar, poly_f2_of(half));
    }

    PolyZ4 f = hensel_lift(fbar, n);
    PolyZ4 g = hensel_lift(gbar, n);
    if (!(howell(circulant({f + 2 * g}, n)) == h))
        throw Error(ErrorKind::Internal, "canonical ideal generator does not reproduce the span");
    return {std::move(f), std::move(g)};
}

DoubleCyclicCode code_from_span(int r, int s, const MatZ4& rows) {
    require_odd_length(r, "r");
    require_odd_length(s, "s");
    const auto ur = static_cast<std::size_t>(r), us = static_cast<std::size_t>(s);
    if (rows.ncols() != ur + us) throw Error(ErrorKind::DimensionMismatch, "rows do not have length r + s");

    const HowellForm h = howell(rows);
    for (const auto& row : h.matrix().rows())
        if (!h.contains(shift_T(CodeVector::split(row, r, s)).concat()))
            throw Error(ErrorKind::DegenerateGenerators, "span is not invariant under the double shift",
                        "not-shift-invariant");

    std::vector<PolyZ4> right;
    for (const auto& row : h.matrix().rows()) right.push_back(poly_of(row.begin() + r, row.end()));
    auto [f2, g2] = canonicalize_ideal(right, s);

    std::vector<std::size_t> perm(ur + us);
    for (std::size_t j = 0; j < us; ++j) perm[j] = ur + j;
    for (std::size_t j = 0; j < ur; ++j) perm[us + j] = j;
    const HowellForm hp = howell(rows.permute_columns(perm));

    std::vector<PolyZ4> left;
    for (std::size_t i = 0; i < hp.pivots().size(); ++i) {
        if (hp.pivots()[i] < us) continue;
        const auto& row = hp.matrix().row(i);
        left.push_back(poly_of(row.begin() + s, row.end()));
    }
    auto [f1, g1] = canonicalize_ideal(left, r);

    const auto lifted = hp.lift_prefix(coeff_vector(reduce_cyclic(f2 + 2 * g2, s), s));
    if (!lifted) throw Error(ErrorKind::Internal, "right generator has no preimage in the span");
    PolyZ4 l = poly_of(lifted->begin() + s, lifted->end());

    DoubleCyclicCode c = validate(CodeSpec{r, s, f1, g1, l, f2, g2});
    if (!span_equal(generator_matrix(c), rows))
        throw Error(ErrorKind::Internal, "extracted generators do not reproduce the span");
    return c;
}

DoubleCyclicCode recover_code(int r, int s, const std::vector<PolyPair>& generators) {
    require_odd_length(r, "r");
    require_odd_length(s, "s");
    return code_from_span(r, s, double_circulant(generators, r, s));
}

BinaryCode residue_code(const DoubleCyclicCode& c) {
    BinaryCode b;
    b.r = c.r();
    b.s = c.s();
    b.F1 = reduce_mod2(reduce_cyclic(c.F1(), c.r()));
    b.l = reduce_mod2(c.l());
    b.F2 = reduce_mod2(reduce_cyclic(c.F2(), c.s()));
    const MatZ4 m = double_circulant({{embed(b.F1), {}}, {embed(b.l), embed(b.F2)}}, c.r(), c.s());
    std::vector<VecF2> rows;
    for (const auto& row : m.rows()) {
        VecF2 v(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) v[j] = row[j] & 1;
        rows.push_back(std::move(v));
    }
    b.basis = rref_f2(std::move(rows), static_cast<std::size_t>(c.r() + c.s()));
    return b;
}

// ---- enumeration ---------------------------------------------------------

std::uint64_t default_enum_cap() {
    if (const char* env = std::getenv("Z4DC_MAX_ENUM"); env && *env) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return default_enum_cap_value;
}

PackedWord PackedWord::pack(const VecZ4& v) {
    if (v.size() > static_cast<std::size_t>(max_len))
        throw Error(ErrorKind::DimensionMismatch, "word longer than " + std::to_string(max_len) + " symbols");
    PackedWord w;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v[i] & 1) w.lo[i / 64] |= bit;
        if (v[i] & 2) w.hi[i / 64] |= bit;
    }
    return w;
}

VecZ4 PackedWord::unpack(std::size_t len) const {
    VecZ4 v(len);
    for (std::size_t i = 0; i < len; ++i) {
        const unsigned b = static_cast<unsigned>(i % 64);
        v[i] = static_cast<std::uint8_t>(((lo[i / 64] >> b) & 1) | (((hi[i / 64] >> b) & 1) << 1));
    }
    return v;
}

CodewordEnumerator::CodewordEnumerator(const DoubleCyclicCode& c, std::uint64_t cap)
    : r_(c.r()), s_(c.s()), len_(c.r() + c.s()), nwords_((c.r() + c.s() + 63) / 64) {
    if (len_ > PackedWord::max_len)
        throw Error(ErrorKind::DimensionMismatch, "r + s exceeds " + std::to_string(PackedWord::max_len));
    const CodeSize sz = c.size();
    if (sz.log2() >= 64 || sz.count() > cap)
        throw Error(ErrorKind::EnumerationCapExceeded,
                    "code has 2^" + std::to_string(sz.log2()) + " codewords, cap is " + std::to_string(cap));
    count_ = sz.count();
    for (const auto& g : minimal_generating_set(c)) {
        const VecZ4 v = g.v.concat();
        rows_.push_back(PackedWord::pack(v));
        wrap_.push_back(PackedWord::pack(scale(v, -(g.order - 1))));
        radix_.push_back(g.order);
    }
}

std::vector<int> CodewordEnumerator::digits(std::uint64_t idx) const {
    std::vector<int> d(radix_.size(), 0);
    for (std::size_t j = radix_.size(); j-- > 0;) {
        d[j] = static_cast<int>(idx % static_cast<std::uint64_t>(radix_[j]));
        idx /= static_cast<std::uint64_t>(radix_[j]);
    }
    return d;
}

PackedWord CodewordEnumerator::at(std::uint64_t idx) const {
    if (idx >= count_) throw Error(ErrorKind::DimensionMismatch, "codeword index out of range");
    const auto d = digits(idx);
    PackedWord w;
    for (std::size_t j = 0; j < d.size(); ++j)
        for (int k = 0; k < d[j]; ++k) w.add(rows_[j], nwords_);
    return w;
}

CodeVector CodewordEnumerator::unpack(const PackedWord& w) const {
    return CodeVector::split(w.unpack(static_cast<std::size_t>(len_)), r_, s_);
}

std::vector<CodeVector> enumerate_codewords(const DoubleCyclicCode& c, std::uint64_t cap) {
    const CodewordEnumerator e(c, cap);
    std::vector<CodeVector> out;
    out.reserve(e.count());
    e.for_each(0, e.count(), [&](const PackedWord& w) { out.push_back(e.unpack(w)); });
    return out;
}

}  // namespace z4dc

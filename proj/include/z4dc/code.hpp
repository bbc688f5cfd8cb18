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

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z4dc/error.hpp"
#include "z4dc/linalg.hpp"
#include "z4dc/poly.hpp"
#include "z4dc/ring.hpp"

namespace z4dc {

struct CodeVector {
    VecZ4 left;   // length r
    VecZ4 right;  // length s

    VecZ4 concat() const;
    static CodeVector split(const VecZ4& v, int r, int s);
    friend bool operator==(const CodeVector&, const CodeVector&) = default;
    friend auto operator<=>(const CodeVector&, const CodeVector&) = default;
};

using PolyPair = std::pair<PolyZ4, PolyZ4>;

// Simultaneous right rotation of both blocks.
CodeVector shift_T(const CodeVector& v);
PolyPair tau(const CodeVector& v);
CodeVector tau_inv(const PolyPair& p, int r, int s);
// (p a mod x^r-1 | p b mod x^s-1)
PolyPair xstar_mul(const PolyZ4& p, const PolyPair& pair, int r, int s);

// Generators as supplied by a user; a missing value means that generator is absent.
struct CodeSpec {
    int r = 1;
    int s = 1;
    std::optional<PolyZ4> f1, g1, l, f2, g2;
};

enum class CodeCase { first_only, second_only, both };  // (i), (ii), (iii)
std::string to_string(CodeCase c);

// |C| = 4^quaternary * 2^binary
struct CodeSize {
    int quaternary = 0;
    int binary = 0;
    int log2() const { return 2 * quaternary + binary; }
    std::uint64_t count() const;
    friend bool operator==(const CodeSize&, const CodeSize&) = default;
};

class DoubleCyclicCode {
   public:
    int r() const noexcept { return r_; }
    int s() const noexcept { return s_; }
    const PolyZ4& f1() const noexcept { return f1_; }
    const PolyZ4& g1() const noexcept { return g1_; }
    const PolyZ4& l() const noexcept { return l_; }
    const PolyZ4& f2() const noexcept { return f2_; }
    const PolyZ4& g2() const noexcept { return g2_; }
    // Whether validation had to reduce the supplied l.
    bool l_was_reduced() const noexcept { return l_reduced_; }

    bool first_present() const noexcept { return first_; }
    bool second_present() const noexcept { return second_; }
    CodeCase code_case() const noexcept;
    bool is_free() const noexcept { return f1_ == g1_ && f2_ == g2_; }

    // f + 2g, literally (leading coefficient 3 when f = g).
    PolyZ4 F1() const { return f1_ + 2 * g1_; }
    PolyZ4 F2() const { return f2_ + 2 * g2_; }
    PolyZ4 h1() const { return exact_div(cyclic_modulus(r_), f1_); }
    PolyZ4 h2() const { return exact_div(cyclic_modulus(s_), f2_); }
    int t1() const noexcept { return f1_.degree(); }
    int t2() const noexcept { return g1_.degree(); }
    int r1() const noexcept { return f2_.degree(); }
    int r2() const noexcept { return g2_.degree(); }

    CodeSize size() const;
    // Spec with absent generators omitted again.
    CodeSpec spec() const;

    friend DoubleCyclicCode validate(const CodeSpec& spec);

   private:
    int r_ = 1, s_ = 1;
    PolyZ4 f1_, g1_, l_, f2_, g2_;
    bool first_ = false, second_ = false, l_reduced_ = false;
};

DoubleCyclicCode validate(const CodeSpec& spec);

// Whether p lies in the ideal (f + 2g) of Z4[x]/(x^n-1), for monic g | f | x^n-1.
bool ideal_contains(const PolyZ4& f, const PolyZ4& g, const PolyZ4& p, int n);

struct GeneratorRow {
    CodeVector v;
    int order;   // 4 or 2
    int family;  // 1..4
};

std::vector<GeneratorRow> minimal_generating_set(const DoubleCyclicCode& c);
MatZ4 generator_matrix(const DoubleCyclicCode& c);
inline CodeSize code_size(const DoubleCyclicCode& c) { return c.size(); }
bool contains(const DoubleCyclicCode& c, const CodeVector& v);

// All x^i p mod x^n-1 as rows.
MatZ4 circulant(const std::vector<PolyZ4>& polys, int n);
// All x^i * (a | b) as rows of length r + s.
MatZ4 double_circulant(const std::vector<PolyPair>& pairs, int r, int s);

// Monic (f, g), g | f | x^n-1, with (f + 2g) equal to the ideal the polynomials
// generate. Zero ideal gives f = g = x^n-1.
std::pair<PolyZ4, PolyZ4> canonicalize_ideal(const std::vector<PolyZ4>& spanning, int n);

// Canonical generators of the double cyclic code spanned by the rows.
// Throws when the span is not invariant under shift_T.
DoubleCyclicCode code_from_span(int r, int s, const MatZ4& rows);

// Code generated by arbitrary pairs (a_i | b_i); the recovery path for
// generators that fail validation.
DoubleCyclicCode recover_code(int r, int s, const std::vector<PolyPair>& generators);

struct BinaryCode {
    int r = 1, s = 1;
    PolyF2 F1, l, F2;
    std::vector<VecF2> basis;  // reduced row echelon basis, length r + s
    std::size_t dimension() const { return basis.size(); }
    bool contains(const VecF2& v) const { return in_span_f2(basis, v); }
};

BinaryCode residue_code(const DoubleCyclicCode& c);

// ---- enumeration ---------------------------------------------------------

constexpr std::uint64_t default_enum_cap_value = std::uint64_t{1} << 26;
// Z4DC_MAX_ENUM if set, else 2^26.
std::uint64_t default_enum_cap();

// A Z4 word as two bitplanes: symbol = lo + 2 hi.
struct PackedWord {
    static constexpr int max_words = 4;
    static constexpr int max_len = 64 * max_words;
    std::array<std::uint64_t, max_words> lo{}, hi{};

    void add(const PackedWord& o, int nwords) {
        for (int w = 0; w < nwords; ++w) {
            const std::uint64_t carry = lo[w] & o.lo[w];
            lo[w] ^= o.lo[w];
            hi[w] ^= o.hi[w] ^ carry;
        }
    }
    static PackedWord pack(const VecZ4& v);
    VecZ4 unpack(std::size_t len) const;
};

class CodewordEnumerator {
   public:
    CodewordEnumerator(const DoubleCyclicCode& c, std::uint64_t cap);
    explicit CodewordEnumerator(const DoubleCyclicCode& c) : CodewordEnumerator(c, default_enum_cap()) {}

    std::uint64_t count() const noexcept { return count_; }
    int length() const noexcept { return len_; }
    int nwords() const noexcept { return nwords_; }

    // Codeword with mixed-radix index idx; the first generator row is the most
    // significant digit.
    PackedWord at(std::uint64_t idx) const;

    // Visits indices [begin, end) in order.
    template <class F>
    void for_each(std::uint64_t begin, std::uint64_t end, F&& visit) const {
        if (begin >= end) return;
        std::vector<int> digit = digits(begin);
        PackedWord w = at(begin);
        const int nd = static_cast<int>(rows_.size());
        for (std::uint64_t idx = begin;;) {
            visit(static_cast<const PackedWord&>(w));
            if (++idx == end) break;
            for (int j = nd - 1; j >= 0; --j) {
                if (++digit[j] < radix_[j]) {
                    w.add(rows_[j], nwords_);
                    break;
                }
                digit[j] = 0;
                w.add(wrap_[j], nwords_);
            }
        }
    }

    CodeVector unpack(const PackedWord& w) const;

   private:
    std::vector<int> digits(std::uint64_t idx) const;

    int r_, s_, len_, nwords_;
    std::uint64_t count_ = 1;
    std::vector<PackedWord> rows_, wrap_;  // wrap_ = -(radix-1) * row
    std::vector<int> radix_;
};

std::vector<CodeVector> enumerate_codewords(const DoubleCyclicCode& c, std::uint64_t cap);
inline std::vector<CodeVector> enumerate_codewords(const DoubleCyclicCode& c) {
    return enumerate_codewords(c, default_enum_cap());
}

}  // namespace z4dc

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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace z4dc {

/// Dense univariate polynomial with coefficients in Z/MZ (M = 2 or 4).
///
/// Coefficients are stored in ascending degree order and kept canonical: the
/// highest stored coefficient is nonzero, so the zero polynomial is the empty
/// sequence and has degree -1.
template <unsigned M>
class Poly {
    static_assert(M == 2 || M == 4, "only Z2 and Z4 coefficients are supported");

   public:
    static constexpr unsigned modulus = M;

    Poly() = default;
    Poly(std::initializer_list<int> ascending) {
        c_.reserve(ascending.size());
        for (int v : ascending) c_.push_back(reduce(v));
        trim();
    }
    explicit Poly(std::vector<std::uint8_t> ascending) : c_(std::move(ascending)) {
        for (auto& v : c_) v = static_cast<std::uint8_t>(v % M);
        trim();
    }

    static Poly constant(int v) { return Poly{v}; }
    static Poly monomial(std::size_t k, int coeff = 1) {
        std::vector<std::uint8_t> c(k + 1, 0);
        c[k] = reduce(coeff);
        return Poly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    std::uint8_t lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const noexcept { return lead() == 1; }
    std::uint8_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::span<const std::uint8_t> coeffs() const noexcept { return c_; }

    void set(std::size_t i, int v) {
        if (i >= c_.size()) c_.resize(i + 1, 0);
        c_[i] = reduce(v);
        trim();
    }

    Poly& operator+=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = static_cast<std::uint8_t>((c_[i] + rhs.c_[i]) % M);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& rhs) {
        if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
        for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] = static_cast<std::uint8_t>((c_[i] + M - rhs.c_[i]) % M);
        trim();
        return *this;
    }
    Poly& operator*=(int s) {
        const auto k = reduce(s);
        for (auto& v : c_) v = static_cast<std::uint8_t>((v * k) % M);
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= static_cast<int>(M - 1); }
    friend Poly operator*(Poly a, int s) { return a *= s; }
    friend Poly operator*(int s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<unsigned> acc(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i] * b.c_[j];
        }
        std::vector<std::uint8_t> out(acc.size());
        for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint8_t>(acc[i] % M);
        return Poly(std::move(out));
    }
    Poly& operator*=(const Poly& rhs) { return *this = *this * rhs; }

    // Multiplication by x^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<std::uint8_t> out(k, 0);
        out.insert(out.end(), c_.begin(), c_.end());
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly&, const Poly&) = default;
    // Degree first, then coefficients from the top down: a total order used for
    // deterministic listings.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
        if (auto cmp = a.c_.size() <=> b.c_.size(); cmp != 0) return cmp;
        return std::lexicographical_compare_three_way(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

   private:
    static std::uint8_t reduce(int v) { return static_cast<std::uint8_t>(((v % static_cast<int>(M)) + M) % M); }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::uint8_t> c_;
};

using PolyZ4 = Poly<4>;
using PolyF2 = Poly<2>;

}  // namespace z4dc

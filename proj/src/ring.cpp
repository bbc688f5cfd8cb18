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

#include "z4dc/ring.hpp"

#include <algorithm>
#include <string>

#include "z4dc/error.hpp"
#include "z4dc/linalg.hpp"

namespace z4dc {

namespace {

void require_odd(int n, const char* what) {
    if (n < 1 || n % 2 == 0)
        throw Error(ErrorKind::EvenLength, std::string(what) + ": length must be a positive odd integer, got " +
                                               std::to_string(n));
}

template <unsigned M>
Poly<M> reduce_cyclic_impl(const Poly<M>& a, int n) {
    if (n < 1) throw Error(ErrorKind::DimensionMismatch, "cyclic length must be positive");
    if (a.degree() < n) return a;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n), 0);
    const auto c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto& slot = out[i % static_cast<std::size_t>(n)];
        slot = static_cast<std::uint8_t>((slot + c[i]) % M);
    }
    return Poly<M>(std::move(out));
}

// Long division by d whose leading coefficient has inverse `inv`.
template <unsigned M>
std::pair<Poly<M>, Poly<M>> long_divide(const Poly<M>& a, const Poly<M>& d, int inv) {
    const int dd = d.degree();
    if (a.degree() < dd) return {Poly<M>{}, a};
    std::vector<std::uint8_t> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<std::uint8_t> q(static_cast<std::size_t>(a.degree() - dd + 1), 0);
    const auto dc = d.coeffs();
    for (int k = a.degree(); k >= dd; --k) {
        const unsigned t = (r[static_cast<std::size_t>(k)] * static_cast<unsigned>(inv)) % M;
        if (t == 0) continue;
        const std::size_t shift = static_cast<std::size_t>(k - dd);
        q[shift] = static_cast<std::uint8_t>(t);
        for (std::size_t j = 0; j < dc.size(); ++j)
            r[shift + j] = static_cast<std::uint8_t>((r[shift + j] + M * M - t * dc[j]) % M);
    }
    r.resize(static_cast<std::size_t>(dd));
    return {Poly<M>(std::move(q)), Poly<M>(std::move(r))};
}

template <unsigned M>
Poly<M> reciprocal_impl(const Poly<M>& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "reciprocal of the zero polynomial");
    std::vector<std::uint8_t> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly<M>(std::move(c));
}

}  // namespace

PolyZ4 cyclic_modulus(int n) { return PolyZ4::monomial(static_cast<std::size_t>(n)) - PolyZ4{1}; }
PolyF2 cyclic_modulus_f2(int n) { return PolyF2::monomial(static_cast<std::size_t>(n)) + PolyF2{1}; }

PolyZ4 reduce_cyclic(const PolyZ4& a, int n) { return reduce_cyclic_impl(a, n); }
PolyF2 reduce_cyclic(const PolyF2& a, int n) { return reduce_cyclic_impl(a, n); }

PolyZ4 mul_mod_cyclic(const PolyZ4& a, const PolyZ4& b, int n) {
    return reduce_cyclic(reduce_cyclic(a, n) * reduce_cyclic(b, n), n);
}
PolyF2 mul_mod_cyclic(const PolyF2& a, const PolyF2& b, int n) {
    return reduce_cyclic(reduce_cyclic(a, n) * reduce_cyclic(b, n), n);
}

std::pair<PolyZ4, PolyZ4> divmod_monic(const PolyZ4& a, const PolyZ4& d) {
    const auto u = d.lead();
    if (u != 1 && u != 3)
        throw Error(ErrorKind::NonUnitLeadingCoefficient,
                    "divisor leading coefficient " + std::to_string(u) + " is not a unit");
    return long_divide(a, d, u);  // 1 and 3 are their own inverses mod 4
}

std::pair<PolyF2, PolyF2> divmod(const PolyF2& a, const PolyF2& d) {
    if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    return long_divide(a, d, 1);
}

PolyZ4 rem(const PolyZ4& a, const PolyZ4& d) { return divmod_monic(a, d).second; }
PolyF2 rem(const PolyF2& a, const PolyF2& d) { return divmod(a, d).second; }

PolyZ4 exact_div(const PolyZ4& a, const PolyZ4& d) {
    auto [q, r] = divmod_monic(a, d);
    if (!r.is_zero()) throw Error(ErrorKind::NotADivisor, "division leaves a nonzero remainder");
    return q;
}

PolyF2 exact_div(const PolyF2& a, const PolyF2& d) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) throw Error(ErrorKind::NotADivisor, "division leaves a nonzero remainder");
    return q;
}

bool divides(const PolyZ4& d, const PolyZ4& a) {
    if (d.is_zero()) return a.is_zero();
    if (d.lead() == 1 || d.lead() == 3) return rem(a, d).is_zero();
    // d = 2 d' with d' monic: a = q d needs a even and d' | a/2 modulo 2.
    const auto dc = d.coeffs();
    if (std::any_of(dc.begin(), dc.end(), [](auto v) { return v % 2 != 0; }))
        throw Error(ErrorKind::UnsupportedDivisor, "divisor has non-unit leading coefficient and odd coefficients");
    const auto ac = a.coeffs();
    if (std::any_of(ac.begin(), ac.end(), [](auto v) { return v % 2 != 0; })) return false;
    std::vector<std::uint8_t> dh(dc.size()), ah(ac.size());
    std::transform(dc.begin(), dc.end(), dh.begin(), [](auto v) { return static_cast<std::uint8_t>(v / 2); });
    std::transform(ac.begin(), ac.end(), ah.begin(), [](auto v) { return static_cast<std::uint8_t>(v / 2); });
    return rem(PolyF2(std::move(ah)), PolyF2(std::move(dh))).is_zero();
}

bool divides(const PolyF2& d, const PolyF2& a) {
    if (d.is_zero()) return a.is_zero();
    return rem(a, d).is_zero();
}

PolyZ4 reciprocal(const PolyZ4& f) { return reciprocal_impl(f); }
PolyF2 reciprocal(const PolyF2& f) { return reciprocal_impl(f); }

PolyZ4 theta(int m) {
    if (m < 1) throw Error(ErrorKind::DimensionMismatch, "theta needs m >= 1");
    return PolyZ4(std::vector<std::uint8_t>(static_cast<std::size_t>(m), 1));
}

PolyF2 reduce_mod2(const PolyZ4& f) { return PolyF2(std::vector<std::uint8_t>(f.coeffs().begin(), f.coeffs().end())); }

PolyZ4 embed(const PolyF2& f) { return PolyZ4(std::vector<std::uint8_t>(f.coeffs().begin(), f.coeffs().end())); }

PolyZ4 make_monic(const PolyZ4& f) {
    if (f.lead() == 1) return f;
    if (f.lead() == 3) return f * 3;
    throw Error(ErrorKind::NonUnitLeadingCoefficient, "cannot normalize a polynomial with non-unit leading coefficient");
}

PolyF2 gcd_f2(const PolyF2& a, const PolyF2& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    PolyF2 x = a, y = b;
    while (!y.is_zero()) {
        PolyF2 r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x;  // over F2 every nonzero polynomial is monic
}

Xgcd xgcd_f2(const PolyF2& a, const PolyF2& b) {
    if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
    PolyF2 r0 = a, r1 = b;
    PolyF2 s0{1}, s1{}, t0{}, t1{1};
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        PolyF2 s = s0 - q * s1;
        PolyF2 t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    return {r0, s0, t0};
}

PolyZ4 hensel_lift(const PolyF2& fbar, int n) {
    require_odd(n, "hensel_lift");
    if (fbar.is_zero() || !divides(fbar, cyclic_modulus_f2(n)))
        throw Error(ErrorKind::NotADivisor, "residue polynomial does not divide x^" + std::to_string(n) + "+1");
    // f(x) = a(x^2) + x b(x^2);  h(y) = a(y)^2 - y b(y)^2 has the squared roots.
    std::vector<std::uint8_t> ev, od;
    const auto c = fbar.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) (i % 2 == 0 ? ev : od).push_back(c[i]);
    const PolyZ4 a(std::move(ev)), b(std::move(od));
    PolyZ4 h = a * a - (b * b).shifted(1);
    if (h.lead() == 3) h = -h;
    if (!h.is_monic() || reduce_mod2(h) != fbar || !divides(h, cyclic_modulus(n)))
        throw Error(ErrorKind::InternalLiftCheckFailed, "Graeffe lift failed its divisibility check");
    return h;
}

PolyZ4 inverse_mod_monic(const PolyZ4& a, const PolyZ4& m) {
    const PolyZ4 mm = make_monic(m);
    if (mm.degree() < 1) return {};  // the quotient ring is zero
    const PolyF2 abar = rem(reduce_mod2(a), reduce_mod2(mm));
    if (abar.is_zero()) throw Error(ErrorKind::NotInvertible, "element is zero modulo 2");
    const Xgcd x = xgcd_f2(abar, reduce_mod2(mm));
    if (x.g != PolyF2{1}) throw Error(ErrorKind::NotInvertible, "residues share a common factor");
    const PolyZ4 b0 = embed(x.u);
    const PolyZ4 ab0 = rem(a * b0, mm);
    return rem(b0 * (PolyZ4{2} - ab0), mm);
}

std::vector<PolyF2> factor_cyclic_f2(int n) {
    require_odd(n, "factor_cyclic_f2");
    const PolyF2 f = cyclic_modulus_f2(n);
    const auto un = static_cast<std::size_t>(n);

    // Berlekamp matrix Q - I, row i = x^(2i) mod f minus x^i.
    std::vector<VecF2> q(un, VecF2(un, 0));
    for (std::size_t i = 0; i < un; ++i) {
        const PolyF2 xi = rem(PolyF2::monomial(2 * i), f);
        for (std::size_t j = 0; j < un; ++j) q[i][j] = xi[j];
        q[i][i] ^= 1;
    }
    const auto basis = left_nullspace_f2(q, un);

    std::vector<PolyF2> factors{f};
    for (const auto& v : basis) {
        if (factors.size() == basis.size()) break;
        const PolyF2 vp(std::vector<std::uint8_t>(v.begin(), v.end()));
        if (vp.degree() < 1) continue;
        std::vector<PolyF2> next;
        for (const auto& u : factors) {
            if (u.degree() <= 1) {
                next.push_back(u);
                continue;
            }
            PolyF2 rest = u;
            for (int cst = 0; cst < 2 && rest.degree() > 0; ++cst) {
                const PolyF2 g = gcd_f2(rest, vp - PolyF2{cst});
                if (g.degree() > 0 && g.degree() < rest.degree()) {
                    next.push_back(g);
                    rest = exact_div(rest, g);
                }
            }
            if (rest.degree() > 0) next.push_back(rest);
        }
        factors = std::move(next);
    }
    if (factors.size() != basis.size())
        throw Error(ErrorKind::Internal, "Berlekamp split produced an unexpected number of factors");
    std::sort(factors.begin(), factors.end());
    return factors;
}

}  // namespace z4dc

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

#include <utility>
#include <vector>

#include "z4dc/poly.hpp"

namespace z4dc {

/// x^n - 1 over Z4 (over F2 this is x^n + 1).
PolyZ4 cyclic_modulus(int n);
PolyF2 cyclic_modulus_f2(int n);

/// Reduction modulo x^n - 1 by folding exponents.
PolyZ4 reduce_cyclic(const PolyZ4& a, int n);
PolyF2 reduce_cyclic(const PolyF2& a, int n);
PolyZ4 mul_mod_cyclic(const PolyZ4& a, const PolyZ4& b, int n);
PolyF2 mul_mod_cyclic(const PolyF2& a, const PolyF2& b, int n);

/// Division with remainder by a polynomial whose leading coefficient is a unit.
/// Throws NonUnitLeadingCoefficient otherwise.
std::pair<PolyZ4, PolyZ4> divmod_monic(const PolyZ4& a, const PolyZ4& d);
std::pair<PolyF2, PolyF2> divmod(const PolyF2& a, const PolyF2& d);

PolyZ4 rem(const PolyZ4& a, const PolyZ4& d);
PolyF2 rem(const PolyF2& a, const PolyF2& d);

/// Exact quotient a / d; throws NotADivisor when the remainder is nonzero.
PolyZ4 exact_div(const PolyZ4& a, const PolyZ4& d);
PolyF2 exact_div(const PolyF2& a, const PolyF2& d);

/// Whether some q over Z4 satisfies a = q * d. Supports unit-lead divisors,
/// divisors of the form 2 * (unit-lead polynomial), and d = 0.
bool divides(const PolyZ4& d, const PolyZ4& a);
bool divides(const PolyF2& d, const PolyF2& a);

/// x^deg(f) * f(1/x), using the actual degree of f.
PolyZ4 reciprocal(const PolyZ4& f);
PolyF2 reciprocal(const PolyF2& f);

/// 1 + x + ... + x^(m-1).
PolyZ4 theta(int m);

PolyF2 reduce_mod2(const PolyZ4& f);
/// Coefficientwise embedding {0,1} -> {0,1} subset of Z4.
PolyZ4 embed(const PolyF2& f);

/// Scale by the inverse of the leading unit so the result is monic.
PolyZ4 make_monic(const PolyZ4& f);

/// Monic gcd over F2. Throws BothZero when a = b = 0.
PolyF2 gcd_f2(const PolyF2& a, const PolyF2& b);

struct Xgcd {
    PolyF2 g, u, v;  // u*a + v*b = g
};
Xgcd xgcd_f2(const PolyF2& a, const PolyF2& b);

/// Unique monic divisor of x^n - 1 over Z4 reducing to fbar mod 2 (n odd),
/// computed with the Graeffe square-root construction and verified by division.
PolyZ4 hensel_lift(const PolyF2& fbar, int n);

/// b with a*b = 1 mod m over Z4, for monic m whose residue is coprime to a's.
PolyZ4 inverse_mod_monic(const PolyZ4& a, const PolyZ4& m);

/// Distinct monic irreducible factors of x^n + 1 over F2 (n odd), found with
/// Berlekamp's algorithm. Sorted by degree, then coefficients.
std::vector<PolyF2> factor_cyclic_f2(int n);

}  // namespace z4dc

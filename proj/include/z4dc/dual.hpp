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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z4dc/code.hpp"

namespace z4dc {

int inner_product(const CodeVector& u, const CodeVector& v);

// The pairing into Z4[x]/(x^k-1), k = lcm(r, s). A zero component of c2
// contributes nothing.
PolyZ4 phi_map(const PolyPair& c1, const PolyPair& c2, int r, int s);

struct Orthogonality {
    bool orthogonal = true;
    std::optional<int> witness_shift;  // first i with <u, T^i v> != 0
};
Orthogonality orthogonal_all_shifts(const CodeVector& u, const CodeVector& v);

enum class DualMethod { free_closed_form, brute_kernel };
std::string to_string(DualMethod m);

struct DualReport {
    DualMethod method = DualMethod::brute_kernel;
    DoubleCyclicCode dual;
    // Literal generators (F1_hat | 0), (l_hat | F2_hat) of the dual.
    PolyZ4 F1_hat, l_hat, F2_hat;
    bool F1_hat_absent = false;
    // Closed-form intermediates; empty for the kernel method.
    std::optional<PolyZ4> gcd_F1_l, F1_hat_star, F2_hat_star, A, nu_modulus, nu_congruence;
    // l_hat* F1 = nu (x^r-1),  F1_hat* gcd = lambda (x^r-1),  F2_hat* F1 F2 = mu (x^s-1) gcd
    std::optional<PolyZ4> nu, lambda, mu;
    std::optional<bool> kernel_agrees;  // closed form compared with the kernel
    CodeSize size;
    std::vector<std::string> notes;
};

// Default limit on r + s for the kernel computation.
constexpr int default_dual_max_columns = 64;

DualReport dual_brute_force(const DoubleCyclicCode& c, int max_columns = default_dual_max_columns);
MatZ4 dual_kernel(const DoubleCyclicCode& c, int max_columns = default_dual_max_columns);

// Closed form for free codes. Throws NotFree, ProjectionNotFree (the first
// projection is not free, gcd(F1, l) does not divide l) or NotInvertible.
DualReport dual_free(const DoubleCyclicCode& c, int max_columns = default_dual_max_columns);

// Closed form when it applies, kernel otherwise (with a note saying why).
DualReport dual_auto(const DoubleCyclicCode& c, int max_columns = default_dual_max_columns);

struct NamedCheck {
    std::string name;
    bool ok = false;
};

struct ResidueDualCheck {
    PolyF2 F1_hat_bar, l_hat_bar, F2_hat_bar, gcd_bar;
    std::optional<PolyF2> nu_bar;           // witness: l_hat* F1 = nu (x^r-1)
    std::optional<PolyF2> nu_cofactor_bar;  // l_hat = nu (x^r-1)/F1* for a representative meeting the congruence
    std::vector<NamedCheck> checks;
    bool all_ok() const;
    std::optional<bool> get(const std::string& name) const;
};

// Residue-level relations between a code and the dual spanned by dual_span.
ResidueDualCheck residue_dual_check(const DoubleCyclicCode& c, const MatZ4& dual_span);

struct Projection {
    PolyZ4 f, g;    // ideal (f + 2g) of the projection
    CodeSize size;  // counted by Howell form
};

Projection project_left(int r, int s, const MatZ4& rows);
Projection project_right(int r, int s, const MatZ4& rows);
inline Projection project_r(const DoubleCyclicCode& c) { return project_left(c.r(), c.s(), generator_matrix(c)); }
inline Projection project_s(const DoubleCyclicCode& c) { return project_right(c.r(), c.s(), generator_matrix(c)); }

struct ProjectionSizes {
    int epsilon = 0;
    // log4 of the predicted sizes of C_r, C_s, (C^perp)_r, (C^perp)_s
    int code_r = 0, code_s = 0, dual_r = 0, dual_s = 0;
};
// Predicted projection sizes for a free code.
ProjectionSizes free_projection_sizes(const DoubleCyclicCode& c);

}  // namespace z4dc

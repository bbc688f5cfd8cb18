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

#include "z4dc/dual.hpp"

#include <numeric>

#include "z4dc/poly_io.hpp"

namespace z4dc {

namespace {

PolyZ4 theta_of_power(int m, int step) {
    PolyZ4 t;
    for (int i = 0; i < m; ++i) t += PolyZ4::monomial(static_cast<std::size_t>(i * step));
    return t;
}

PolyZ4 monomial(int k) { return PolyZ4::monomial(static_cast<std::size_t>(std::max(k, 0))); }

PolyZ4 gcd_lift(const PolyZ4& a, const PolyZ4& b, int n) {
    return hensel_lift(gcd_f2(reduce_mod2(a), reduce_mod2(b)), n);
}

std::optional<PolyZ4> exact_quotient(const PolyZ4& a, const PolyZ4& d) {
    auto [q, r] = divmod_monic(a, d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

void check_columns(const DoubleCyclicCode& c, int max_columns) {
    if (c.r() + c.s() > max_columns)
        throw Error(ErrorKind::DimensionCapExceeded,
                    "r + s = " + std::to_string(c.r() + c.s()) + " exceeds the kernel limit " +
                        std::to_string(max_columns));
}

void fill_from_dual(DualReport& rep) {
    rep.F1_hat = reduce_cyclic(rep.dual.F1(), rep.dual.r());
    rep.F1_hat_absent = !rep.dual.first_present();
    rep.l_hat = rep.dual.l();
    rep.F2_hat = reduce_cyclic(rep.dual.F2(), rep.dual.s());
    rep.size = rep.dual.size();
}

}  // namespace

int inner_product(const CodeVector& u, const CodeVector& v) {
    if (u.left.size() != v.left.size() || u.right.size() != v.right.size())
        throw Error(ErrorKind::DimensionMismatch, "vectors live in different ambient spaces");
    unsigned acc = 0;
    for (std::size_t i = 0; i < u.left.size(); ++i) acc += u.left[i] * v.left[i];
    for (std::size_t i = 0; i < u.right.size(); ++i) acc += u.right[i] * v.right[i];
    return static_cast<int>(acc % 4);
}

PolyZ4 phi_map(const PolyPair& c1, const PolyPair& c2, int r, int s) {
    const int k = std::lcm(r, s);
    auto term = [&](const PolyZ4& a, const PolyZ4& b, int n) -> PolyZ4 {
        if (b.is_zero() || a.is_zero()) return {};
        return reduce_cyclic(a * theta_of_power(k / n, n) * monomial(k - 1 - b.degree()) * reciprocal(b), k);
    };
    return reduce_cyclic(term(c1.first, c2.first, r) + term(c1.second, c2.second, s), k);
}

Orthogonality orthogonal_all_shifts(const CodeVector& u, const CodeVector& v) {
    const int k = std::lcm(static_cast<int>(std::max<std::size_t>(u.left.size(), 1)),
                           static_cast<int>(std::max<std::size_t>(u.right.size(), 1)));
    CodeVector w = v;
    for (int i = 0; i < k; ++i) {
        if (inner_product(u, w) != 0) return {false, i};
        w = shift_T(w);
    }
    return {};
}

std::string to_string(DualMethod m) {
    return m == DualMethod::free_closed_form ? "free-closed-form" : "brute-kernel";
}

MatZ4 dual_kernel(const DoubleCyclicCode& c, int max_columns) {
    check_columns(c, max_columns);
    return kernel(generator_matrix(c));
}

DualReport dual_brute_force(const DoubleCyclicCode& c, int max_columns) {
    const MatZ4 k = dual_kernel(c, max_columns);
    DualReport rep;
    rep.method = DualMethod::brute_kernel;
    rep.dual = code_from_span(c.r(), c.s(), k);
    fill_from_dual(rep);
    return rep;
}

DualReport dual_free(const DoubleCyclicCode& c, int max_columns) {
    if (!c.is_free()) throw Error(ErrorKind::NotFree, "code is not free: f1 != g1 or f2 != g2");
    const int r = c.r(), s = c.s(), k = std::lcm(r, s);
    const PolyZ4 mr = cyclic_modulus(r), ms = cyclic_modulus(s);

    // Monic form: (f1|0) and 3 (l | 3 f2) = (3l | f2).
    const PolyZ4& F1 = c.f1();
    const PolyZ4& F2 = c.f2();
    const PolyZ4 l = c.second_present() ? 3 * c.l() : PolyZ4{};

    const PolyZ4 g = gcd_lift(F1, l, r);
    const auto A = exact_quotient(l, g);
    if (!A)
        throw Error(ErrorKind::ProjectionNotFree,
                    "gcd(F1, l) = " + format_poly(g) + " does not divide l = " + format_poly(l) + " over Z4");

    DualReport rep;
    rep.method = DualMethod::free_closed_form;
    rep.gcd_F1_l = g;
    rep.A = *A;
    rep.F1_hat_star = exact_div(mr, g);
    rep.F2_hat_star = exact_div(ms * g, F1 * F2);
    const PolyZ4 D = make_monic(exact_div(reciprocal(F1), reciprocal(g)));
    rep.nu_modulus = D;

    PolyZ4 nu_c;
    if (!l.is_zero() && D.degree() > 0) {
        const PolyZ4 inv = inverse_mod_monic(reciprocal(*A), D);
        nu_c = rem(monomial(k + l.degree() - F2.degree()) * inv, D);
    }
    rep.nu_congruence = nu_c;

    const PolyZ4 l_hat = reduce_cyclic(nu_c * exact_div(mr, reciprocal(F1)), r);
    const PolyZ4 F2_hat = reciprocal(*rep.F2_hat_star);
    const bool first_absent = g.degree() == 0;
    const PolyZ4 F1_hat = first_absent ? PolyZ4{} : reciprocal(*rep.F1_hat_star);

    // Store as a canonical free quintuple: f = g = monic(F), l scaled to match (l | 3 f2).
    CodeSpec sp;
    sp.r = r;
    sp.s = s;
    if (!first_absent) {
        sp.f1 = make_monic(F1_hat);
        sp.g1 = sp.f1;
    }
    const PolyZ4 f2_hat = make_monic(F2_hat);
    sp.f2 = f2_hat;
    sp.g2 = f2_hat;
    sp.l = reduce_cyclic(3 * F2_hat.lead() * l_hat, r);
    rep.dual = validate(sp);

    rep.F1_hat = F1_hat;
    rep.F1_hat_absent = first_absent;
    rep.l_hat = l_hat;
    rep.F2_hat = F2_hat;
    rep.size = rep.dual.size();

    if (!l_hat.is_zero()) rep.nu = exact_quotient(reciprocal(l_hat) * F1, mr);
    else rep.nu = PolyZ4{};
    rep.lambda = exact_quotient(*rep.F1_hat_star * g, mr);
    rep.mu = exact_quotient(*rep.F2_hat_star * F1 * F2, ms * g);

    if (r + s <= max_columns) {
        rep.kernel_agrees =
            span_equal(double_circulant({{F1_hat, {}}, {l_hat, F2_hat}}, r, s), kernel(generator_matrix(c))) &&
            span_equal(generator_matrix(rep.dual), kernel(generator_matrix(c)));
        if (!*rep.kernel_agrees) rep.notes.push_back("closed form disagrees with the kernel");
    }
    return rep;
}

DualReport dual_auto(const DoubleCyclicCode& c, int max_columns) {
    if (!c.is_free()) {
        DualReport rep = dual_brute_force(c, max_columns);
        rep.notes.push_back("code is not free; dual taken from the kernel");
        return rep;
    }
    try {
        return dual_free(c, max_columns);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ProjectionNotFree && e.kind() != ErrorKind::NotInvertible) throw;
        DualReport rep = dual_brute_force(c, max_columns);
        rep.notes.push_back(std::string("closed form not applicable (") + std::string(to_string(e.kind())) +
                            "); dual taken from the kernel");
        return rep;
    }
}

bool ResidueDualCheck::all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
}

std::optional<bool> ResidueDualCheck::get(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return c.ok;
    return std::nullopt;
}

ResidueDualCheck residue_dual_check(const DoubleCyclicCode& c, const MatZ4& dual_span) {
    const int r = c.r(), s = c.s(), k = std::lcm(r, s);
    const DoubleCyclicCode d = code_from_span(r, s, dual_span);

    ResidueDualCheck out;
    const PolyF2 xr = cyclic_modulus_f2(r), xs = cyclic_modulus_f2(s);
    const PolyF2 F1 = reduce_mod2(c.f1()), F2 = reduce_mod2(c.f2());
    const PolyF2 l = reduce_mod2(c.l());
    // Monic parts carry the residues; for an absent generator they give x^n+1.
    out.F1_hat_bar = reduce_mod2(d.f1());
    out.F2_hat_bar = reduce_mod2(d.f2());
    out.l_hat_bar = reduce_mod2(d.l());
    const PolyF2 g = gcd_f2(F1, l);
    out.gcd_bar = g;
    auto add = [&](std::string name, bool ok) { out.checks.push_back({std::move(name), ok}); };
    auto quotient = [](const PolyF2& a, const PolyF2& b) -> std::optional<PolyF2> {
        auto [q, rr] = divmod(a, b);
        if (!rr.is_zero()) return std::nullopt;
        return q;
    };

    const auto f1_pred = quotient(xr, g);
    add("F1_hat_star_residue", f1_pred && reciprocal(out.F1_hat_bar) == *f1_pred);
    const auto f2_pred = quotient(xs * g, F1 * F2);
    add("F2_hat_star_residue", f2_pred && reciprocal(out.F2_hat_bar) == *f2_pred);
    const PolyF2 g2l = gcd_f2(F2, l);
    const auto f2_alt = quotient(xs * g2l, F1 * F2);
    add("F2_hat_star_residue_gcd_F2_l", f2_alt && reciprocal(out.F2_hat_bar) == *f2_alt);

    add("deg_F1_hat", out.F1_hat_bar.degree() == r - g.degree());
    add("deg_F2_hat", out.F2_hat_bar.degree() == s - F2.degree() - F1.degree() + g.degree());

    // l_hat* F1 = nu (x^r - 1); the residue of nu satisfies a congruence modulo F1*/gcd*.
    std::optional<PolyZ4> nu;
    if (d.l().is_zero()) nu = PolyZ4{};
    else if (auto [q, rr] = divmod_monic(reciprocal(d.l()) * c.f1(), cyclic_modulus(r)); rr.is_zero()) nu = q;
    add("nu_exists", nu.has_value());
    if (nu) out.nu_bar = reduce_mod2(*nu);
    // The congruence pins nu_bar only for a particular l_hat; l_hat is defined up
    // to multiples of F1_hat, so look for a representative that satisfies it.
    if (!l.is_zero()) {
        const PolyF2 A = *quotient(l, g);
        const PolyF2 mod = *quotient(reciprocal(F1), reciprocal(g));
        auto pow = [](int e) { return PolyF2::monomial(static_cast<std::size_t>(std::max(e, 0))); };
        const Xgcd e = xgcd_f2(reciprocal(A), mod);
        const PolyF2 pred = rem(pow(k - F2.degree() + l.degree()) * e.u, mod);
        auto congruent = [&](const PolyF2& nb) {
            const PolyF2 lhs = nb * pow(k - l.degree() - 1) * reciprocal(A) + pow(k - F2.degree() - 1);
            return rem(lhs, mod).is_zero();
        };
        // cofactor of l_hat = nu' (x^r-1)/F1*  versus  the witness of l_hat* F1 = nu (x^r-1)
        auto cofactor_of = [&](const PolyF2& lh) -> std::optional<PolyF2> {
            return quotient(lh * reciprocal(F1), xr);
        };
        auto witness_of = [&](const PolyF2& lh) -> std::optional<PolyF2> {
            if (lh.is_zero()) return PolyF2{};
            return quotient(reciprocal(lh) * F1, xr);
        };
        const int free_deg = r - out.F1_hat_bar.degree();
        if (free_deg <= 16) {
            bool cof = mod.degree() <= 0, cof_closed = cof, wit = cof;
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_deg); ++m) {
                std::vector<std::uint8_t> q(static_cast<std::size_t>(free_deg));
                for (int i = 0; i < free_deg; ++i) q[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(m >> i & 1);
                const PolyF2 lh = reduce_cyclic(out.l_hat_bar + PolyF2(std::move(q)) * out.F1_hat_bar, r);
                if (const auto nb = cofactor_of(lh); nb && congruent(*nb)) {
                    if (!cof) out.nu_cofactor_bar = nb;
                    cof = true;
                    cof_closed = cof_closed || (e.g == PolyF2{1} && rem(*nb, mod) == pred);
                }
                if (const auto nb = witness_of(lh); nb && congruent(*nb)) wit = true;
            }
            add("nu_congruence", cof);
            add("nu_closed_form", cof_closed);
            add("nu_congruence_for_reciprocal_witness", wit);
        }
    }

    // Z4-level divisibility with the monic forms and gcd lifted from the residues.
    const PolyZ4 G = hensel_lift(g, r);
    const PolyZ4 mr = cyclic_modulus(r), ms = cyclic_modulus(s);
    const PolyZ4 F1_hat_star = reciprocal(d.f1());
    add("lambda_exists", rem(F1_hat_star * G, mr).is_zero());
    add("mu_exists", divides(ms * G, reciprocal(d.f2()) * c.f1() * c.f2()));
    add("nu_divisibility", d.l().is_zero() || rem(reciprocal(d.l()) * c.f1(), mr).is_zero());
    return out;
}

namespace {

Projection project_block(int n, const MatZ4& block) {
    std::vector<PolyZ4> polys;
    for (const auto& row : block.rows()) polys.emplace_back(std::vector<std::uint8_t>(row.begin(), row.end()));
    auto [f, g] = canonicalize_ideal(polys, n);
    const auto log2 = howell(block).log2_size();
    const int q = n - f.degree(), b = f.degree() - g.degree();
    if (static_cast<int>(log2) != 2 * q + b) throw Error(ErrorKind::Internal, "projection size mismatch");
    return {std::move(f), std::move(g), CodeSize{q, b}};
}

}  // namespace

Projection project_left(int r, int /*s*/, const MatZ4& rows) {
    return project_block(r, rows.column_block(0, static_cast<std::size_t>(r)));
}

Projection project_right(int r, int s, const MatZ4& rows) {
    return project_block(s, rows.column_block(static_cast<std::size_t>(r), static_cast<std::size_t>(s)));
}

ProjectionSizes free_projection_sizes(const DoubleCyclicCode& c) {
    if (!c.is_free()) throw Error(ErrorKind::NotFree, "projection size formulas need a free code");
    const PolyF2 F1 = reduce_mod2(c.f1());
    const PolyF2 l = reduce_mod2(c.l());
    const int degF1 = c.f1().degree(), degF2 = c.f2().degree();
    ProjectionSizes p;
    p.epsilon = degF1 - gcd_f2(F1, l).degree();
    p.code_r = c.r() - degF1 + p.epsilon;
    p.code_s = c.s() - degF2;
    p.dual_r = degF1;
    p.dual_s = degF2 + p.epsilon;
    return p;
}

}  // namespace z4dc

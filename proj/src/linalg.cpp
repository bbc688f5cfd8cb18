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

#include "z4dc/linalg.hpp"

#include <algorithm>
#include <optional>

#include "z4dc/error.hpp"

namespace z4dc {

namespace {

std::size_t leading_column(const VecZ4& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return v.size();
}

// v -= k * w, in place.
void axpy_neg(VecZ4& v, const VecZ4& w, unsigned k) {
    k %= 4;
    if (k == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint8_t>((v[i] + 4 * 4 - k * w[i]) % 4);
}

void axpy(VecZ4& v, const VecZ4& w, unsigned k) {
    k %= 4;
    if (k == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint8_t>((v[i] + k * w[i]) % 4);
}

}  // namespace

MatZ4::MatZ4(std::size_t ncols, std::vector<VecZ4> rows) : ncols_(ncols) {
    rows_.reserve(rows.size());
    for (auto& r : rows) push_row(std::move(r));
}

MatZ4 MatZ4::identity(std::size_t n) {
    MatZ4 m(n);
    for (std::size_t i = 0; i < n; ++i) {
        VecZ4 r(n, 0);
        r[i] = 1;
        m.rows_.push_back(std::move(r));
    }
    return m;
}

void MatZ4::push_row(VecZ4 row) {
    if (row.size() != ncols_)
        throw Error(ErrorKind::DimensionMismatch,
                    "row of length " + std::to_string(row.size()) + " in matrix with " + std::to_string(ncols_) +
                        " columns");
    for (auto& v : row) v %= 4;
    rows_.push_back(std::move(row));
}

MatZ4 MatZ4::permute_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != ncols_) throw Error(ErrorKind::DimensionMismatch, "permutation size differs from column count");
    MatZ4 out(ncols_);
    for (const auto& r : rows_) {
        VecZ4 p(ncols_);
        for (std::size_t j = 0; j < ncols_; ++j) p[j] = r[perm[j]];
        out.rows_.push_back(std::move(p));
    }
    return out;
}

MatZ4 MatZ4::column_block(std::size_t first, std::size_t count) const {
    if (first + count > ncols_) throw Error(ErrorKind::DimensionMismatch, "column block out of range");
    MatZ4 out(count);
    for (const auto& r : rows_) out.rows_.emplace_back(r.begin() + first, r.begin() + first + count);
    return out;
}

MatZ4 MatZ4::transpose() const {
    MatZ4 out(rows_.size());
    for (std::size_t j = 0; j < ncols_; ++j) {
        VecZ4 c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = rows_[i][j];
        out.rows_.push_back(std::move(c));
    }
    return out;
}

VecZ4 MatZ4::apply(const VecZ4& v) const {
    if (v.size() != ncols_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
    VecZ4 out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        unsigned acc = 0;
        for (std::size_t j = 0; j < ncols_; ++j) acc += rows_[i][j] * v[j];
        out[i] = static_cast<std::uint8_t>(acc % 4);
    }
    return out;
}

HowellForm howell(const MatZ4& m) {
    const std::size_t n = m.ncols();
    std::vector<std::optional<VecZ4>> basis(n);
    std::vector<VecZ4> work(m.rows().rbegin(), m.rows().rend());

    while (!work.empty()) {
        VecZ4 v = std::move(work.back());
        work.pop_back();
        for (;;) {
            const std::size_t c = leading_column(v);
            if (c == n) break;
            if (!basis[c]) {
                if (v[c] == 3) v = scale(v, 3);
                if (v[c] == 2) work.push_back(scale(v, 2));
                basis[c] = std::move(v);
                break;
            }
            VecZ4& b = *basis[c];
            if (b[c] == 1) {
                axpy_neg(v, b, v[c]);
            } else if (v[c] == 2) {
                axpy_neg(v, b, 1);
            } else {
                // A unit entry beats the existing pivot 2: swap and re-insert the old row.
                if (v[c] == 3) v = scale(v, 3);
                std::swap(b, v);
            }
        }
    }

    HowellForm h;
    h.matrix_ = MatZ4(n);
    std::vector<VecZ4> rows;
    for (std::size_t c = 0; c < n; ++c) {
        if (!basis[c]) continue;
        h.pivots_.push_back(c);
        rows.push_back(std::move(*basis[c]));
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
        for (std::size_t i = k + 1; i < rows.size(); ++i) {
            const std::size_t p = h.pivots_[i];
            const unsigned e = rows[k][p];
            if (rows[i][p] == 1)
                axpy_neg(rows[k], rows[i], e);
            else if (e >= 2)
                axpy_neg(rows[k], rows[i], 1);
        }
    }
    for (auto& r : rows) h.matrix_.push_row(std::move(r));
    return h;
}

std::size_t HowellForm::log2_size() const {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < pivots_.size(); ++i) bits += matrix_.row(i)[pivots_[i]] == 1 ? 2 : 1;
    return bits;
}

bool HowellForm::contains(const VecZ4& v) const {
    if (v.size() != ncols()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from column count");
    VecZ4 t = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const auto& row = matrix_.row(i);
        const unsigned e = t[pivots_[i]];
        if (row[pivots_[i]] == 1) {
            axpy_neg(t, row, e);
        } else {
            if (e % 2 != 0) return false;
            axpy_neg(t, row, e / 2);
        }
    }
    return is_zero(t);
}

std::optional<VecZ4> HowellForm::lift_prefix(const VecZ4& prefix) const {
    const std::size_t len = prefix.size();
    if (len > ncols()) throw Error(ErrorKind::DimensionMismatch, "prefix longer than row length");
    VecZ4 t = prefix;
    VecZ4 acc(ncols(), 0);
    for (std::size_t i = 0; i < pivots_.size() && pivots_[i] < len; ++i) {
        const auto& row = matrix_.row(i);
        const unsigned e = t[pivots_[i]];
        unsigned coeff = e;
        if (row[pivots_[i]] == 2) {
            if (e % 2 != 0) return std::nullopt;
            coeff = e / 2;
        }
        if (coeff == 0) continue;
        for (std::size_t j = 0; j < len; ++j) t[j] = static_cast<std::uint8_t>((t[j] + 16 - coeff * row[j]) % 4);
        axpy(acc, row, coeff);
    }
    if (!is_zero(t)) return std::nullopt;
    return acc;
}

bool membership(const HowellForm& h, const VecZ4& v) { return h.contains(v); }

MatZ4 kernel(const MatZ4& m) {
    const std::size_t k = m.nrows();
    const std::size_t n = m.ncols();
    if (k == 0) return MatZ4::identity(n);
    MatZ4 aug(k + n);
    for (std::size_t j = 0; j < n; ++j) {
        VecZ4 r(k + n, 0);
        for (std::size_t i = 0; i < k; ++i) r[i] = m.row(i)[j];
        r[k + j] = 1;
        aug.push_row(std::move(r));
    }
    const HowellForm h = howell(aug);
    MatZ4 out(n);
    for (std::size_t i = 0; i < h.pivots().size(); ++i) {
        if (h.pivots()[i] < k) continue;
        const auto& r = h.matrix().row(i);
        out.push_row(VecZ4(r.begin() + static_cast<std::ptrdiff_t>(k), r.end()));
    }
    return out;
}

bool span_equal(const MatZ4& a, const MatZ4& b) {
    if (a.ncols() != b.ncols()) throw Error(ErrorKind::DimensionMismatch, "matrices differ in column count");
    return howell(a) == howell(b);
}

VecZ4 add(const VecZ4& a, const VecZ4& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    VecZ4 out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + b[i]) % 4);
    return out;
}

VecZ4 sub(const VecZ4& a, const VecZ4& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    VecZ4 out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] + 4 - b[i]) % 4);
    return out;
}

VecZ4 scale(const VecZ4& a, int k) {
    const unsigned kk = static_cast<unsigned>(((k % 4) + 4) % 4);
    VecZ4 out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>((a[i] * kk) % 4);
    return out;
}

bool is_zero(const VecZ4& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint8_t v) { return v == 0; });
}

std::vector<VecF2> rref_f2(std::vector<VecF2> rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] ^= rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::vector<VecF2> left_nullspace_f2(const std::vector<VecF2>& rows, std::size_t ncols) {
    const std::size_t m = rows.size();
    std::vector<VecF2> aug;
    aug.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        VecF2 r(ncols + m, 0);
        for (std::size_t j = 0; j < ncols; ++j) r[j] = rows[i][j] & 1;
        r[ncols + i] = 1;
        aug.push_back(std::move(r));
    }
    aug = rref_f2(std::move(aug), ncols + m);
    std::vector<VecF2> out;
    for (const auto& r : aug) {
        if (std::any_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(ncols), [](auto v) { return v != 0; }))
            continue;
        out.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(ncols), r.end());
    }
    return out;
}

bool in_span_f2(const std::vector<VecF2>& rref_basis, VecF2 v) {
    for (const auto& b : rref_basis) {
        std::size_t p = 0;
        while (p < b.size() && b[p] == 0) ++p;
        if (p < v.size() && v[p] != 0)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] ^= b[j];
    }
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace z4dc

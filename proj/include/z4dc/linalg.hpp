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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace z4dc {

using VecZ4 = std::vector<std::uint8_t>;

/// Dense matrix over Z4, stored as rows of residues in {0,1,2,3}.
class MatZ4 {
   public:
    MatZ4() = default;
    explicit MatZ4(std::size_t ncols) : ncols_(ncols) {}
    MatZ4(std::size_t ncols, std::vector<VecZ4> rows);

    static MatZ4 identity(std::size_t n);

    std::size_t ncols() const noexcept { return ncols_; }
    std::size_t nrows() const noexcept { return rows_.size(); }
    const std::vector<VecZ4>& rows() const noexcept { return rows_; }
    const VecZ4& row(std::size_t i) const { return rows_.at(i); }

    void push_row(VecZ4 row);

    /// Columns reordered so that output column j is input column perm[j].
    MatZ4 permute_columns(std::span<const std::size_t> perm) const;
    /// Columns [first, first + count).
    MatZ4 column_block(std::size_t first, std::size_t count) const;
    MatZ4 transpose() const;
    /// m * v^T over Z4.
    VecZ4 apply(const VecZ4& v) const;

    friend bool operator==(const MatZ4&, const MatZ4&) = default;

   private:
    std::size_t ncols_ = 0;
    std::vector<VecZ4> rows_;
};

/// Howell canonical form of a row span over Z4.
///
/// Rows are in echelon order with pivots normalized to 1 or 2; entries above a
/// pivot are reduced modulo that pivot; for every pivot-2 row, twice the row
/// lies in the span of the rows below it. Two matrices have the same row span
/// exactly when their Howell forms are equal.
class HowellForm {
   public:
    const MatZ4& matrix() const noexcept { return matrix_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    std::size_t ncols() const noexcept { return matrix_.ncols(); }
    std::size_t rank_rows() const noexcept { return pivots_.size(); }

    /// log2 of the number of vectors in the span: 2 per unit pivot, 1 per pivot 2.
    std::size_t log2_size() const;

    bool contains(const VecZ4& v) const;

    /// A span element whose leading entries equal `prefix`, if one exists.
    /// Relies on the Howell property: the rows with pivots inside the prefix
    /// restrict to a Howell form of the projected span.
    std::optional<VecZ4> lift_prefix(const VecZ4& prefix) const;

    friend bool operator==(const HowellForm&, const HowellForm&) = default;

   private:
    friend HowellForm howell(const MatZ4& m);
    MatZ4 matrix_;
    std::vector<std::size_t> pivots_;
};

HowellForm howell(const MatZ4& m);

bool membership(const HowellForm& h, const VecZ4& v);

/// Generators of {v : m * v^T = 0}.
MatZ4 kernel(const MatZ4& m);

bool span_equal(const MatZ4& a, const MatZ4& b);

// Z4 vector helpers.
VecZ4 add(const VecZ4& a, const VecZ4& b);
VecZ4 sub(const VecZ4& a, const VecZ4& b);
VecZ4 scale(const VecZ4& a, int k);
bool is_zero(const VecZ4& a);

// Linear algebra over F2 on 0/1 byte vectors.
using VecF2 = std::vector<std::uint8_t>;

/// Reduced row echelon basis of the row span over F2.
std::vector<VecF2> rref_f2(std::vector<VecF2> rows, std::size_t ncols);
/// Basis of {v : v * m = 0} (left null space), m given by rows.
std::vector<VecF2> left_nullspace_f2(const std::vector<VecF2>& rows, std::size_t ncols);
bool in_span_f2(const std::vector<VecF2>& rref_basis, VecF2 v);

}  // namespace z4dc

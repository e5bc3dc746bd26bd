// Copyright 2026 The qsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSUM_MASTER_HPP
#define QSUM_MASTER_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "qsum/poly.hpp"
#include "qsum/sums.hpp"

namespace qsum {

/// Coefficient matrix of the biquadratic form
///
///   F(u, x) = (u^2, u, 1) M (x^2, x, 1)^T.
///
/// Rows are indexed by powers of u, columns by powers of x, both from the
/// square term down to the constant.
class CoeffMatrix3 {
public:
    explicit CoeffMatrix3(const FiniteField& field) : field_(field) {}
    /// Nine entries in row-major order.  Throws FieldMismatch.
    CoeffMatrix3(const FiniteField& field, std::span<const FieldElement> row_major);
    /// Nine integers in row-major order.  Throws ConfigInvalid on a wrong count.
    static CoeffMatrix3 from_ints(const FiniteField& field, std::span<const std::int64_t> row_major);
    static CoeffMatrix3 from_ints(const FiniteField& field, std::initializer_list<std::int64_t> row_major) {
        return from_ints(field, std::span<const std::int64_t>(row_major.begin(), row_major.size()));
    }

    const FiniteField& field() const noexcept { return field_; }
    FieldElement at(int row, int col) const { return {field_, m_[idx(row, col)]}; }
    const Coords& raw(int row, int col) const noexcept { return m_[idx(row, col)]; }
    void set(int row, int col, const FieldElement& v);

    CoeffMatrix3 transpose() const;

    friend bool operator==(const CoeffMatrix3& a, const CoeffMatrix3& b) noexcept {
        return a.field_ == b.field_ && a.m_ == b.m_;
    }

private:
    static std::size_t idx(int r, int c) noexcept { return static_cast<std::size_t>(3 * r + c); }

    FiniteField field_;
    std::array<Coords, 9> m_{};
};

struct QuadraticTriple {
    Poly first;
    Poly second;
    Poly third;

    friend bool operator==(const QuadraticTriple&, const QuadraticTriple&) = default;
};

/// alpha, beta, gamma: F(u, x) = alpha(x) u^2 + beta(x) u + gamma(x).
QuadraticTriple row_polys(const CoeffMatrix3& m);
/// delta_1, delta_2, delta_3: F(u, x) = delta_1(u) x^2 + delta_2(u) x + delta_3(u).
QuadraticTriple down_polys(const CoeffMatrix3& m);

/// F(u, x).
FieldElement eval_form(const CoeffMatrix3& m, const FieldElement& u, const FieldElement& x);

/// The two sides of the master formula and a raw count.
///
///   lhs   = q n_{alpha,beta,gamma} - n_alpha + sum_x sigma(beta^2 - 4 alpha gamma)
///   rhs   = q n_{d1,d2,d3} - n_{d1} + sum_u sigma(d2^2 - 4 d1 d3)
///   brute = #{(u, x) : F(u, x) = 0} - q
///
/// All three agree for every matrix, degenerate ones included.
struct MasterSides {
    std::int64_t lhs;
    std::int64_t rhs;
    std::int64_t brute;

    bool consistent() const noexcept { return lhs == rhs && rhs == brute; }
};

MasterSides master_sides(const CoeffMatrix3& m, const Budget& budget = {});

/// When beta^2 - 4 alpha gamma is square-free, checks that neither the row
/// nor the down polynomials have a common zero and returns true (throwing
/// IdentityViolation if one does).  Returns false when the discriminant
/// polynomial is not square-free (including when it is zero).
bool square_free_implies_no_common_zeros(const CoeffMatrix3& m, const Budget& budget = {});

}  // namespace qsum

#endif  // QSUM_MASTER_HPP

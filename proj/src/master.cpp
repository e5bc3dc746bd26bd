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

#include "qsum/master.hpp"

#include <string>
#include <vector>

namespace qsum {

CoeffMatrix3::CoeffMatrix3(const FiniteField& field, std::span<const FieldElement> row_major) : field_(field) {
    if (row_major.size() != 9) throw Error(Errc::ConfigInvalid, "coefficient matrix needs 9 entries");
    for (std::size_t i = 0; i < 9; ++i) {
        if (!(row_major[i].field() == field)) throw Error(Errc::FieldMismatch, "matrix entry outside " + field.name());
        m_[i] = row_major[i].coords();
    }
}

CoeffMatrix3 CoeffMatrix3::from_ints(const FiniteField& field, std::span<const std::int64_t> row_major) {
    if (row_major.size() != 9)
        throw Error(Errc::ConfigInvalid,
                    "coefficient matrix needs 9 entries, got " + std::to_string(row_major.size()));
    CoeffMatrix3 m(field);
    for (std::size_t i = 0; i < 9; ++i) m.m_[i] = field.embed(row_major[i]);
    return m;
}

void CoeffMatrix3::set(int row, int col, const FieldElement& v) {
    if (!(v.field() == field_)) throw Error(Errc::FieldMismatch, "matrix entry outside " + field_.name());
    m_[idx(row, col)] = v.coords();
}

CoeffMatrix3 CoeffMatrix3::transpose() const {
    CoeffMatrix3 t(field_);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t.m_[idx(c, r)] = m_[idx(r, c)];
    return t;
}

QuadraticTriple row_polys(const CoeffMatrix3& m) {
    const FiniteField& F = m.field();
    auto row = [&](int r) { return Poly(F, {m.raw(r, 2), m.raw(r, 1), m.raw(r, 0)}); };
    return {row(0), row(1), row(2)};
}

QuadraticTriple down_polys(const CoeffMatrix3& m) { return row_polys(m.transpose()); }

FieldElement eval_form(const CoeffMatrix3& m, const FieldElement& u, const FieldElement& x) {
    const FiniteField& F = m.field();
    if (!(u.field() == F) || !(x.field() == F)) throw Error(Errc::FieldMismatch, "form evaluated outside " + F.name());
    const std::array<Coords, 3> us{F.mul(u.coords(), u.coords()), u.coords(), Coords{1, 0, 0}};
    const std::array<Coords, 3> xs{F.mul(x.coords(), x.coords()), x.coords(), Coords{1, 0, 0}};
    Coords acc{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            acc = F.add(acc, F.mul(us[static_cast<std::size_t>(r)], F.mul(m.raw(r, c), xs[static_cast<std::size_t>(c)])));
    return {F, acc};
}

namespace {

std::int64_t side(const QuadraticTriple& t, const Budget& budget) {
    const auto q = static_cast<std::int64_t>(t.first.field().q());
    const auto common = static_cast<std::int64_t>(common_zero_count(t.first, t.second, t.third, budget));
    const auto n_lead = static_cast<std::int64_t>(zero_count(t.first, budget));
    const Poly disc = t.second * t.second - 4 * (t.first * t.third);
    return q * common - n_lead + char_sum(disc, budget).value;
}

}  // namespace

MasterSides master_sides(const CoeffMatrix3& m, const Budget& budget) {
    const FiniteField& F = m.field();
    budget.check(F);
    const std::int64_t lhs = side(row_polys(m), budget);
    const std::int64_t rhs = side(down_polys(m), budget);

    // Raw count straight from the matrix entries, independent of either
    // quadratic expansion.
    std::vector<std::array<Coords, 3>> powers(F.q());
    for (std::uint64_t i = 0; i < F.q(); ++i) {
        const Coords t = F.from_index(i);
        powers[i] = {F.mul(t, t), t, Coords{1, 0, 0}};
    }
    std::int64_t zeros = 0;
    for (const auto& us : powers) {
        for (const auto& xs : powers) {
            Coords v{};
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    v = F.add(v, F.mul(us[static_cast<std::size_t>(r)], F.mul(m.raw(r, c), xs[static_cast<std::size_t>(c)])));
            zeros += FiniteField::is_zero(v);
        }
    }
    return {lhs, rhs, zeros - static_cast<std::int64_t>(F.q())};
}

bool square_free_implies_no_common_zeros(const CoeffMatrix3& m, const Budget& budget) {
    const QuadraticTriple r = row_polys(m);
    const Poly disc = r.second * r.second - 4 * (r.first * r.third);
    if (disc.is_zero() || !is_square_free(disc)) return false;
    const QuadraticTriple d = down_polys(m);
    const std::uint64_t n_rows = common_zero_count(r.first, r.second, r.third, budget);
    const std::uint64_t n_down = common_zero_count(d.first, d.second, d.third, budget);
    if (n_rows != 0 || n_down != 0)
        throw Error(Errc::IdentityViolation, "square-free discriminant but common zeros: rows " +
                                                 std::to_string(n_rows) + ", down " + std::to_string(n_down));
    return true;
}

}  // namespace qsum

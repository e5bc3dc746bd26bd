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

#ifndef QSUM_CLOSED_FORMS_HPP
#define QSUM_CLOSED_FORMS_HPP

#include <cstdint>

#include "qsum/sums.hpp"

namespace qsum {

/// Integer solution of p = A^2 + d B^2 (d = 3) or 4p = A^2 + d B^2 (d = 19).
struct QuadFormRep {
    enum class Form { P, FourP };

    std::int64_t a;
    std::int64_t b;
    int d;
    Form form;

    /// The defining equation holds exactly for prime p.
    bool represents(std::uint64_t p) const noexcept;
};

/// Square root of a modulo an odd prime p; the smaller of the two roots.
/// Throws NonResidue.
std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p);

/// p = A^2 + 3 B^2 with B > 0 and A = -1 (mod 3).  Throws WrongResidueClass
/// unless p = 1 (mod 3).
QuadFormRep cornacchia(std::uint64_t p);

/// 4p = A^2 + 19 B^2 with A, B > 0.  Throws WrongResidueClass unless
/// (p/19) = 1.
QuadFormRep cornacchia_4p(std::uint64_t p);

/// sum_x (x^3 + 1 / p): 2 A_3 when p = 1 (mod 3), else 0.
std::int64_t jacobsthal_cubic(std::uint64_t p);

/// sum_x (x^3 - 2^3 19 lambda^2 x + 2 19^2 lambda^3 / p):
/// (2 lambda / p)(A / 19) A when (p/19) = 1, else 0.
/// Throws PIs19 or LambdaZero.
std::int64_t rpr_cubic(std::uint64_t p, std::int64_t lambda);

/// The cubic whose sum rpr_cubic evaluates.
Poly rpr_poly(const FiniteField& field, std::int64_t lambda);

/// sum_x (x^4 + 14x^3 + 24x^2 + 14x + 1 / p) in closed form.
std::int64_t example_1(std::uint64_t p);
Poly example_1_poly(const FiniteField& field);
/// Walks general descent, the shift x := x - 8, the scaling x := -6x and the
/// cubic Jacobsthal evaluation, checking each step by enumeration.
bool example_1_derivation(std::uint64_t p, const Budget& budget = {});

/// sum_x (x^4 + 8x^3 + 24x^2 - 44x + 16 / p) in closed form (p - 1 at p = 19).
std::int64_t example_2(std::uint64_t p);
Poly example_2_poly(const FiniteField& field);
/// Depression by x := x - 2, depressed descent, and the RPR evaluation at
/// lambda = 2, each step checked by enumeration.
bool example_2_derivation(std::uint64_t p, const Budget& budget = {});

/// Shift x := x - 1, depressed descent, rescale x := -4x, then the Zhang
/// identity itself; every step checked by enumeration.
bool example_3(std::uint64_t p, const Budget& budget = {});

}  // namespace qsum

#endif  // QSUM_CLOSED_FORMS_HPP

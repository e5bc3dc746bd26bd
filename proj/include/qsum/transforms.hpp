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

#ifndef QSUM_TRANSFORMS_HPP
#define QSUM_TRANSFORMS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "qsum/poly.hpp"
#include "qsum/sums.hpp"

namespace qsum {

/// A transformation formula as data: the claim is
///
///   char_sum(source) == additive + factor * char_sum(target).
///
/// The maps below only build polynomials and constants; verify() is the one
/// place where the claim is checked by enumeration.
struct TransformResult {
    Poly source;
    Poly target;
    std::int64_t additive;
    std::int64_t factor;
    std::string identity_name;
};

/// Two polynomials whose character sums are claimed equal.
struct SumPair {
    Poly lhs;
    Poly rhs;
};

struct Verification {
    std::int64_t lhs;
    std::int64_t rhs;
    bool holds() const noexcept { return lhs == rhs; }
};

Verification verify(const TransformResult& t, const Budget& budget = {});
Verification verify(const SumPair& pair, const Budget& budget = {});

/// x (x^2 + b x + c) against (x + b)(x^2 - 4c).
SumPair jacobsthal_pair(const FieldElement& b, const FieldElement& c);

/// x^5 + a x^3 + x against x^3 + 4x^2 + (a + 2) x, factor 1 + sigma(-1).
TransformResult leprevost_morain(const FieldElement& a);

/// x^4 + b x^2 + c -> -1 + [x^3 + b x^2 + c x].  Throws DegenerateDiscriminant
/// when b^2 = 4c.
TransformResult descend_biquadratic(const FieldElement& b, const FieldElement& c);

/// Invariants of a product of two monic quadratics.
struct ProductParams {
    FieldElement delta1;  // b1^2 - 4 c1
    FieldElement delta2;  // b2^2 - 4 c2
    FieldElement big_b;   // 4 (c1 + c2) - 2 b1 b2
};

ProductParams product_params(const FieldElement& b1, const FieldElement& c1, const FieldElement& b2,
                             const FieldElement& c2);

/// (x^2 + b1 x + c1)(x^2 + b2 x + c2) -> -1 + [x^3 + B x^2 + D1 D2 x].
/// Throws NotSquareFree.
TransformResult descend_product(const FieldElement& b1, const FieldElement& c1, const FieldElement& b2,
                                const FieldElement& c2);

/// x^4 + a3 x^3 + a2 x^2 + a1 x + a0 ->
///   -1 + [x^3 + a2 x^2 + (a1 a3 - 4 a0) x + a0 (a3^2 - 4 a2) + a1^2].
/// Throws NotSquareFree.
TransformResult descend_quartic(const FieldElement& a3, const FieldElement& a2, const FieldElement& a1,
                                const FieldElement& a0);
/// Same, for a monic quartic given as a Poly.  Throws NotMonicQuartic.
TransformResult descend_quartic(const Poly& f);

/// x^4 + a x^2 + b x + c -> -1 + [x^3 + a x^2 - 4c x + b^2 - 4ac].
/// Throws NotSquareFree.
TransformResult descend_depressed(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// (x^2 + a)^2 - 4x(bx + c) against the same with a and b swapped.
/// Throws DegenerateParameters when (a, c) = (0, 0) or (b, c) = (0, 0).
SumPair symmetric_quartic_pair(const FieldElement& a, const FieldElement& b, const FieldElement& c);

/// x ((x + a)^2 - 4bx) against x ((x + b)^2 - 4ax).  Throws ZeroParameter.
SumPair cubic_cubic_pair(const FieldElement& a, const FieldElement& b);

struct PiIdentity {
    FieldElement pi;
    bool check;
};

/// Pi = (c1 - c2)^2 - b1 b2 (c1 + c2) + b1^2 c2 + b2^2 c1, with
/// check = (16 Pi == B^2 - 4 D1 D2) and (disc(f) == D1 D2 Pi^2).
PiIdentity product_discriminant_identity(const FieldElement& b1, const FieldElement& c1, const FieldElement& b2,
                                         const FieldElement& c2);

/// Derives the product descent from the depressed one: shift by
/// e = -(b1 + b2)/4, check B, D1, D2 are unchanged, descend, shift by b^2/2,
/// rescale by 4 and finish with the Jacobsthal pair.  Every intermediate sum
/// equality is checked by enumeration; returns false on the first mismatch.
/// Throws NotSquareFree.
bool remark_pipeline(const FieldElement& b1, const FieldElement& c1, const FieldElement& b2, const FieldElement& c2,
                     const Budget& budget = {});

struct NagaoCheck {
    std::uint64_t mapped;
    std::uint64_t total;
};

/// Pushes every point (X, Y) of Y^2 = g(X) with 4(X + a2) != a3^2 through
///   x = (2(Y - a1) - a3 X) / (4(X + a2) - a3^2),  y = (2x^2 + a3 x - X) / 2
/// and counts how many land on y^2 = f(x).  Throws NotSquareFree.
NagaoCheck nagao_map_check(const FieldElement& a3, const FieldElement& a2, const FieldElement& a1,
                           const FieldElement& a0, const Budget& budget = {});

/// sum sigma((x^2 + 1)(x^2 + 4x + 1)) == -1 + sigma(-1) sum sigma(x^3 + x^2 + x).
bool zhang_identity(const FiniteField& field, const Budget& budget = {});

}  // namespace qsum

#endif  // QSUM_TRANSFORMS_HPP

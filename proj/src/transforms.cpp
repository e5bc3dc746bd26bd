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

#include "qsum/transforms.hpp"

#include <vector>

namespace qsum {

namespace {

using E = FieldElement;

Poly poly(const FiniteField& F, std::initializer_list<E> high_first) { return Poly::from_elements(F, high_first); }

void require_square_free(const Poly& f, const char* what) {
    if (!is_square_free(f)) throw Error(Errc::NotSquareFree, std::string(what) + " is not square-free");
}

}  // namespace

Verification verify(const TransformResult& t, const Budget& budget) {
    return {char_sum(t.source, budget).value, t.additive + t.factor * char_sum(t.target, budget).value};
}

Verification verify(const SumPair& pair, const Budget& budget) {
    return {char_sum(pair.lhs, budget).value, char_sum(pair.rhs, budget).value};
}

SumPair jacobsthal_pair(const E& b, const E& c) {
    const FiniteField& F = b.field();
    const E one = F.one(), zero = F.zero();
    return {poly(F, {one, b, c, zero}), poly(F, {one, b}) * poly(F, {one, zero, -(4 * c)})};
}

TransformResult leprevost_morain(const E& a) {
    const FiniteField& F = a.field();
    const E one = F.one(), zero = F.zero();
    return {poly(F, {one, zero, a, zero, one, zero}), poly(F, {one, F.element(4), a + F.element(2), zero}), 0,
            1 + F.legendre_minus_one(), "leprevost-morain"};
}

TransformResult descend_biquadratic(const E& b, const E& c) {
    const FiniteField& F = b.field();
    if ((b * b - 4 * c).is_zero()) throw Error(Errc::DegenerateDiscriminant, "biquadratic descent needs b^2 != 4c");
    const E one = F.one(), zero = F.zero();
    return {poly(F, {one, zero, b, zero, c}), poly(F, {one, b, c, zero}), -1, 1, "biquadratic"};
}

ProductParams product_params(const E& b1, const E& c1, const E& b2, const E& c2) {
    return {b1 * b1 - 4 * c1, b2 * b2 - 4 * c2, 4 * (c1 + c2) - 2 * (b1 * b2)};
}

TransformResult descend_product(const E& b1, const E& c1, const E& b2, const E& c2) {
    const FiniteField& F = b1.field();
    const E one = F.one(), zero = F.zero();
    const Poly f = poly(F, {one, b1, c1}) * poly(F, {one, b2, c2});
    require_square_free(f, "product of quadratics");
    const ProductParams pp = product_params(b1, c1, b2, c2);
    return {f, poly(F, {one, pp.big_b, pp.delta1 * pp.delta2, zero}), -1, 1, "product"};
}

TransformResult descend_quartic(const E& a3, const E& a2, const E& a1, const E& a0) {
    const FiniteField& F = a3.field();
    const E one = F.one();
    const Poly f = poly(F, {one, a3, a2, a1, a0});
    require_square_free(f, "quartic");
    const Poly g = poly(F, {one, a2, a1 * a3 - 4 * a0, a0 * (a3 * a3 - 4 * a2) + a1 * a1});
    return {f, g, -1, 1, "general-descent"};
}

TransformResult descend_quartic(const Poly& f) {
    if (f.degree() != 4 || !f.is_monic()) throw Error(Errc::NotMonicQuartic, "general descent needs a monic quartic");
    return descend_quartic(f.coeff(3), f.coeff(2), f.coeff(1), f.coeff(0));
}

TransformResult descend_depressed(const E& a, const E& b, const E& c) {
    const FiniteField& F = a.field();
    const E one = F.one(), zero = F.zero();
    const Poly f = poly(F, {one, zero, a, b, c});
    require_square_free(f, "depressed quartic");
    return {f, poly(F, {one, a, -(4 * c), b * b - 4 * (a * c)}), -1, 1, "depressed-descent"};
}

SumPair symmetric_quartic_pair(const E& a, const E& b, const E& c) {
    const FiniteField& F = a.field();
    if ((a.is_zero() && c.is_zero()) || (b.is_zero() && c.is_zero()))
        throw Error(Errc::DegenerateParameters, "symmetric formula needs (a,c) != (0,0) and (b,c) != (0,0)");
    const E one = F.one(), zero = F.zero();
    auto side = [&](const E& s, const E& t) {
        const Poly sq = poly(F, {one, zero, s});
        return sq * sq - 4 * (Poly::x(F) * poly(F, {t, c}));
    };
    return {side(a, b), side(b, a)};
}

SumPair cubic_cubic_pair(const E& a, const E& b) {
    const FiniteField& F = a.field();
    if (a.is_zero() || b.is_zero()) throw Error(Errc::ZeroParameter, "cubic-to-cubic formula needs a, b != 0");
    const Poly x = Poly::x(F);
    auto side = [&](const E& s, const E& t) {
        const Poly lin = poly(F, {F.one(), s});
        return x * (lin * lin - 4 * Poly::monomial(t, 1));
    };
    return {side(a, b), side(b, a)};
}

PiIdentity product_discriminant_identity(const E& b1, const E& c1, const E& b2, const E& c2) {
    const FiniteField& F = b1.field();
    const E dc = c1 - c2;
    const E pi = dc * dc - b1 * b2 * (c1 + c2) + b1 * b1 * c2 + b2 * b2 * c1;
    const ProductParams pp = product_params(b1, c1, b2, c2);
    const bool sixteen = 16 * pi == pp.big_b * pp.big_b - 4 * (pp.delta1 * pp.delta2);
    const Poly f = poly(F, {F.one(), b1, c1}) * poly(F, {F.one(), b2, c2});
    const bool disc = discriminant(f) == pp.delta1 * pp.delta2 * pi * pi;
    return {pi, sixteen && disc};
}

bool remark_pipeline(const E& b1, const E& c1, const E& b2, const E& c2, const Budget& budget) {
    const FiniteField& F = b1.field();
    const E one = F.one(), zero = F.zero();
    const Poly f = poly(F, {one, b1, c1}) * poly(F, {one, b2, c2});
    require_square_free(f, "product of quadratics");
    const ProductParams pp = product_params(b1, c1, b2, c2);
    const std::int64_t s_f = sigma_sum(f, budget);

    // (i) depress by x := x + e.
    const E e = -((b1 + b2) / F.element(4));
    const Poly f_star = affine_substitute(f, one, e);
    const E b1s = b1 + 2 * e, c1s = e * e + b1 * e + c1;
    const E b2s = b2 + 2 * e, c2s = e * e + b2 * e + c2;
    if (!(f_star == poly(F, {one, b1s, c1s}) * poly(F, {one, b2s, c2s}))) return false;
    if (sigma_sum(f_star, budget) != s_f) return false;
    const ProductParams ps = product_params(b1s, c1s, b2s, c2s);
    if (!(ps.delta1 == pp.delta1 && ps.delta2 == pp.delta2 && ps.big_b == pp.big_b)) return false;
    const E b = b2s;
    if (!(b1s == -b) || !f_star.coeff(3).is_zero()) return false;

    // (ii) depressed descent.
    const TransformResult dd = descend_depressed(f_star.coeff(2), f_star.coeff(1), f_star.coeff(0));
    if (!verify(dd, budget).holds()) return false;
    const E cs = c1s + c2s, cp = c1s * c2s, bsq = b * b;
    const Poly& g = dd.target;
    if (!(g == poly(F, {one, cs - bsq, -(4 * cp), bsq * cs * cs - 4 * (cp * cs)}))) return false;
    if (!(g == poly(F, {one, cs}) * poly(F, {one, -bsq, bsq * cs - 4 * cp}))) return false;

    // x := x + b^2/2 centres the quadratic factor.
    const Poly g1 = affine_substitute(g, one, bsq / F.element(2));
    const E dd12 = pp.delta1 * pp.delta2;
    if (!(g1 == poly(F, {one, pp.big_b / F.element(4)}) * poly(F, {one, zero, -(dd12 / F.element(4))}))) return false;
    const std::int64_t s_g = sigma_sum(g, budget);
    if (sigma_sum(g1, budget) != s_g) return false;

    // x := x/4, then clear the square factor 64.
    const Poly g2 = F.element(64) * affine_substitute(g1, F.element(4).inv(), zero);
    if (!(g2 == poly(F, {one, pp.big_b}) * poly(F, {one, zero, -(4 * dd12)}))) return false;
    if (sigma_sum(g2, budget) != s_g) return false;

    // (iii) Jacobsthal.
    const SumPair jac = jacobsthal_pair(pp.big_b, dd12);
    if (!(jac.rhs == g2) || !verify(jac, budget).holds()) return false;

    const TransformResult prod = descend_product(b1, c1, b2, c2);
    if (!(prod.target == jac.lhs)) return false;
    return s_f == -1 + sigma_sum(jac.lhs, budget);
}

NagaoCheck nagao_map_check(const E& a3, const E& a2, const E& a1, const E& a0, const Budget& budget) {
    const FiniteField& F = a3.field();
    budget.check(F);
    const TransformResult t = descend_quartic(a3, a2, a1, a0);
    const Poly& f = t.source;
    const Poly& g = t.target;

    // Square roots of every element, indexed by field index.
    std::vector<std::vector<Coords>> roots(F.q());
    for (std::uint64_t i = 0; i < F.q(); ++i) {
        const Coords y = F.from_index(i);
        roots[F.index_of(F.mul(y, y))].push_back(y);
    }

    const Coords two = F.embed(2), four = F.embed(4);
    const Coords half = F.inv(two);
    const Coords a3sq = F.mul(a3.coords(), a3.coords());
    NagaoCheck out{0, 0};
    for (std::uint64_t i = 0; i < F.q(); ++i) {
        const Coords X = F.from_index(i);
        const Coords den = F.sub(F.mul(four, F.add(X, a2.coords())), a3sq);
        if (FiniteField::is_zero(den)) continue;
        const Coords den_inv = F.inv(den);
        for (const Coords& Y : roots[F.index_of(g.eval_raw(X))]) {
            ++out.total;
            const Coords num = F.sub(F.mul(two, F.sub(Y, a1.coords())), F.mul(a3.coords(), X));
            const Coords x = F.mul(num, den_inv);
            const Coords y = F.mul(half, F.sub(F.add(F.mul(two, F.mul(x, x)), F.mul(a3.coords(), x)), X));
            out.mapped += F.mul(y, y) == f.eval_raw(x);
        }
    }
    return out;
}

bool zhang_identity(const FiniteField& F, const Budget& budget) {
    const Poly lhs = Poly::from_ints(F, {1, 0, 1}) * Poly::from_ints(F, {1, 4, 1});
    const Poly cubic = Poly::from_ints(F, {1, 1, 1, 0});
    return sigma_sum(lhs, budget) == -1 + F.legendre_minus_one() * sigma_sum(cubic, budget);
}

}  // namespace qsum

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

#include "qsum/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsum/transforms.hpp"

namespace qsum {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

void require_prime(u64 p) {
    if (p == 2 || p == 3) throw Error(Errc::CharTwoOrThree, "p = " + std::to_string(p) + " is excluded");
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
}

// Reduces (a, b) = (m, r0) by Euclid until b <= limit.
u64 euclid_descent(u64 a, u64 b, u64 limit) {
    while (b > limit) {
        const u64 r = a % b;
        a = b;
        b = r;
    }
    return b;
}

// B with d B^2 = rest, if any.
bool exact_quotient_square(u64 rest, u64 d, u64& b) {
    if (rest % d != 0) return false;
    b = isqrt(rest / d);
    return b * b == rest / d;
}

}  // namespace

bool QuadFormRep::represents(std::uint64_t p) const noexcept {
    const i64 lhs = form == Form::P ? static_cast<i64>(p) : 4 * static_cast<i64>(p);
    return a * a + static_cast<i64>(d) * b * b == lhs;
}

std::uint64_t tonelli_shanks(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (legendre_symbol(static_cast<i64>(a), p) != 1)
        throw Error(Errc::NonResidue, std::to_string(a) + " is not a square mod " + std::to_string(p));
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (legendre_symbol(static_cast<i64>(z), p) != -1) ++z;
    u64 m = static_cast<u64>(s);
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0;
        for (u64 tt = t; tt != 1; tt = mulmod(tt, tt, p)) ++i;
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return std::min(r, p - r);
}

QuadFormRep cornacchia(std::uint64_t p) {
    require_prime(p);
    if (p % 3 != 1) throw Error(Errc::WrongResidueClass, "p = A^2 + 3B^2 needs p = 1 mod 3");
    const u64 root = tonelli_shanks(p - 3, p);
    const u64 limit = isqrt(p);
    for (u64 r0 : {root, p - root}) {
        const u64 a = euclid_descent(p, r0, limit);
        u64 b = 0;
        if (a * a <= p && exact_quotient_square(p - a * a, 3, b) && b > 0) {
            i64 A = static_cast<i64>(a);
            if (A % 3 == 1) A = -A;
            return {A, static_cast<i64>(b), 3, QuadFormRep::Form::P};
        }
    }
    throw Error(Errc::IdentityViolation, "Cornacchia descent failed for p = " + std::to_string(p));
}

QuadFormRep cornacchia_4p(std::uint64_t p) {
    require_prime(p);
    if (legendre_symbol(static_cast<i64>(p), 19) != 1)
        throw Error(Errc::WrongResidueClass, "4p = A^2 + 19B^2 needs (p/19) = 1");
    // sqrt(-19) mod p, taken odd so that b^2 = -19 (mod 4p).
    u64 x0 = tonelli_shanks((p - 19 % p) % p, p);
    if (x0 % 2 == 0) x0 = p - x0;
    const u64 limit = isqrt(4 * p);
    const u64 a = euclid_descent(2 * p, x0, limit);
    u64 b = 0;
    if (a * a <= 4 * p && exact_quotient_square(4 * p - a * a, 19, b) && b > 0)
        return {static_cast<i64>(a), static_cast<i64>(b), 19, QuadFormRep::Form::FourP};
    throw Error(Errc::IdentityViolation, "modified Cornacchia descent failed for p = " + std::to_string(p));
}

std::int64_t jacobsthal_cubic(std::uint64_t p) {
    require_prime(p);
    return p % 3 == 1 ? 2 * cornacchia(p).a : 0;
}

Poly rpr_poly(const FiniteField& F, std::int64_t lambda) {
    const FieldElement l = F.element(lambda);
    return Poly::from_elements(F, {F.one(), F.zero(), -(F.element(8 * 19) * l * l), F.element(2 * 19 * 19) * l * l * l});
}

std::int64_t rpr_cubic(std::uint64_t p, std::int64_t lambda) {
    require_prime(p);
    if (p == 19) throw Error(Errc::PIs19, "RPR evaluation excludes p = 19");
    if (lambda % static_cast<i64>(p) == 0) throw Error(Errc::LambdaZero, "lambda must be nonzero mod p");
    if (legendre_symbol(static_cast<i64>(p), 19) != 1) return 0;
    const QuadFormRep rep = cornacchia_4p(p);
    const i64 two_lambda = static_cast<i64>((static_cast<__int128>(2) * lambda) % static_cast<i64>(p));
    return legendre_symbol(two_lambda, p) * legendre_symbol(rep.a, 19) * rep.a;
}

Poly example_1_poly(const FiniteField& F) { return Poly::from_ints(F, {1, 14, 24, 14, 1}); }

std::int64_t example_1(std::uint64_t p) {
    require_prime(p);
    if (p % 3 != 1) return -1;
    return -1 + legendre_symbol(2, p) * 2 * cornacchia(p).a;
}

bool example_1_derivation(std::uint64_t p, const Budget& budget) {
    const FiniteField F = make_field(p);
    const Poly f = example_1_poly(F);
    const TransformResult t = descend_quartic(f);
    if (!(t.target == Poly::from_ints(F, {1, 24, 192, 296}))) return false;
    if (!verify(t, budget).holds()) return false;
    if (!(t.target == pow(Poly::from_ints(F, {1, 8}), 3) - Poly::from_ints(F, {216}))) return false;

    const Poly shifted = affine_substitute(t.target, F.one(), F.element(-8));
    if (!(shifted == Poly::from_ints(F, {1, 0, 0, -216}))) return false;
    const std::int64_t s_shifted = sigma_sum(shifted, budget);
    if (s_shifted != sigma_sum(t.target, budget)) return false;

    const Poly scaled = affine_substitute(shifted, F.element(-6), F.zero());
    const Poly cubic = Poly::from_ints(F, {1, 0, 0, 1});
    if (!(scaled == F.element(-216) * cubic)) return false;
    const std::int64_t s_cubic = sigma_sum(cubic, budget);
    if (sigma_sum(scaled, budget) != s_shifted) return false;
    if (s_shifted != legendre_symbol(-6, p) * s_cubic) return false;
    if (s_cubic != jacobsthal_cubic(p)) return false;
    return sigma_sum(f, budget) == example_1(p);
}

Poly example_2_poly(const FiniteField& F) { return Poly::from_ints(F, {1, 8, 24, -44, 16}); }

std::int64_t example_2(std::uint64_t p) {
    require_prime(p);
    if (p == 19) return static_cast<i64>(p) - 1;
    if (legendre_symbol(static_cast<i64>(p), 19) != 1) return -1;
    const QuadFormRep rep = cornacchia_4p(p);
    return -1 + legendre_symbol(rep.a, 19) * rep.a;
}

bool example_2_derivation(std::uint64_t p, const Budget& budget) {
    const FiniteField F = make_field(p);
    const Poly f = example_2_poly(F);
    const std::int64_t s_f = sigma_sum(f, budget);
    const DepressedQuartic dq = depress_quartic(f);
    if (!(dq.shift == F.element(-2)) || !(dq.poly == Poly::from_ints(F, {1, 0, 0, -76, 152}))) return false;
    if (sigma_sum(dq.poly, budget) != s_f) return false;
    if (p == 19) {
        // The depressed quartic collapses to x^4.
        return dq.poly == Poly::from_ints(F, {1, 0, 0, 0, 0}) && s_f == example_2(p);
    }
    const TransformResult t = descend_depressed(F.zero(), F.element(-76), F.element(152));
    if (!(t.source == dq.poly) || !(t.target == Poly::from_ints(F, {1, 0, -608, 5776}))) return false;
    if (!verify(t, budget).holds()) return false;
    if (!(t.target == rpr_poly(F, 2))) return false;
    if (sigma_sum(t.target, budget) != rpr_cubic(p, 2)) return false;
    return s_f == example_2(p);
}

bool example_3(std::uint64_t p, const Budget& budget) {
    const FiniteField F = make_field(p);
    const Poly x = Poly::x(F);
    const Poly f = Poly::from_ints(F, {1, 0, 1}) * Poly::from_ints(F, {1, 4, 1});
    if (!(f == pow(Poly::from_ints(F, {1, 1}), 4) - 4 * (x * x))) return false;
    const std::int64_t s_f = sigma_sum(f, budget);

    const Poly shifted = affine_substitute(f, F.one(), F.element(-1));
    const Poly x_minus_1 = Poly::from_ints(F, {1, -1});
    if (!(shifted == pow(x, 4) - 4 * (x_minus_1 * x_minus_1))) return false;
    if (sigma_sum(shifted, budget) != s_f) return false;

    const TransformResult t = descend_depressed(F.element(-4), F.element(8), F.element(-4));
    if (!(t.source == shifted) || !(t.target == Poly::from_ints(F, {1, -4, 16, 0}))) return false;
    if (!verify(t, budget).holds()) return false;

    const Poly rescaled = affine_substitute(t.target, F.element(-4), F.zero());
    const Poly cubic = Poly::from_ints(F, {1, 1, 1, 0});
    if (!(rescaled == F.element(-64) * cubic)) return false;
    const std::int64_t s_target = sigma_sum(t.target, budget);
    if (sigma_sum(rescaled, budget) != s_target) return false;
    if (s_target != F.legendre_minus_one() * sigma_sum(cubic, budget)) return false;

    return zhang_identity(F, budget);
}

}  // namespace qsum

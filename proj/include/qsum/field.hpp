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

#ifndef QSUM_FIELD_HPP
#define QSUM_FIELD_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "qsum/error.hpp"

namespace qsum {

/// Canonical coordinates of an element of F_{p^k} in the power basis
/// 1, t, t^2 over F_p.  Unused coordinates are always zero.
using Coords = std::array<std::uint64_t, 3>;

class FieldElement;

bool is_prime(std::uint64_t n) noexcept;

/// Legendre symbol (a/p) for an odd prime p, by the binary Jacobi algorithm.
int legendre_symbol(std::int64_t a, std::uint64_t p) noexcept;

/// F_q with q = p^k, p > 3 prime, 1 <= k <= 3.
///
/// A small immutable value: copies are cheap and share nothing, so fields
/// and their elements can be passed freely between threads.  Extension
/// fields are F_p[t]/(m(t)) where m is the first monic irreducible of
/// degree k when monic polynomials are ordered by the integer
/// sum_{i<k} m_i p^i.
class FiniteField {
public:
    /// Throws NotPrime, CharTwoOrThree or Overflow (q >= 2^63).
    static FiniteField make(std::uint64_t p, int k = 1);

    std::uint64_t p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    std::uint64_t q() const noexcept { return q_; }

    /// Low-order coefficients m_0..m_{k-1} of the monic modulus; empty for k = 1.
    std::span<const std::uint64_t> modulus() const noexcept {
        return {modulus_.data(), k_ == 1 ? 0u : static_cast<std::size_t>(k_)};
    }

    // Raw arithmetic on canonical coordinates.  These are the hot paths used
    // by enumeration loops; FieldElement wraps them with field checks.
    Coords add(const Coords& a, const Coords& b) const noexcept;
    Coords sub(const Coords& a, const Coords& b) const noexcept;
    Coords neg(const Coords& a) const noexcept;
    Coords mul(const Coords& a, const Coords& b) const noexcept;
    Coords pow(Coords a, std::uint64_t e) const noexcept;
    /// Throws DivisionByZero.
    Coords inv(const Coords& a) const;

    static bool is_zero(const Coords& a) noexcept { return (a[0] | a[1] | a[2]) == 0; }

    /// sigma(a): 0 at zero, 1 on nonzero squares, -1 otherwise.  Uses the
    /// Jacobi fast path when k = 1.
    int character(const Coords& a) const noexcept;
    /// sigma(a) computed strictly as a^((q-1)/2).
    int character_by_euler(const Coords& a) const noexcept;

    /// Image of an integer under Z -> F_p -> F_q.
    Coords embed(std::int64_t n) const noexcept;
    /// Bijection [0, q) -> F_q by base-p digits of the index.
    Coords from_index(std::uint64_t i) const noexcept;
    std::uint64_t index_of(const Coords& a) const noexcept;

    FieldElement element(std::int64_t n) const;
    FieldElement at_index(std::uint64_t i) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// The generator t of the power basis (only meaningful for k > 1).
    FieldElement generator() const;

    /// sigma(-1); equals 1 iff q = 1 (mod 4).
    int legendre_minus_one() const noexcept;

    std::string name() const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
        return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
    }

private:
    FiniteField(std::uint64_t p, int k, std::uint64_t q, Coords modulus)
        : p_(p), k_(k), q_(q), modulus_(modulus) {}

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }

    std::uint64_t p_;
    int k_;
    std::uint64_t q_;
    Coords modulus_;
};

inline FiniteField make_field(std::uint64_t p, int k = 1) { return FiniteField::make(p, k); }

/// An element of a FiniteField in canonical form.
class FieldElement {
public:
    FieldElement(const FiniteField& field, const Coords& coords) : field_(field), c_(coords) {}

    const FiniteField& field() const noexcept { return field_; }
    const Coords& coords() const noexcept { return c_; }
    bool is_zero() const noexcept { return FiniteField::is_zero(c_); }
    std::uint64_t index() const noexcept { return field_.index_of(c_); }

    FieldElement operator-() const { return {field_, field_.neg(c_)}; }
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    FieldElement inv() const { return {field_, field_.inv(c_)}; }
    FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(c_, e)}; }

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(std::int64_t n, const FieldElement& b) {
        return {b.field_, b.field_.mul(b.field_.embed(n), b.c_)};
    }

    /// Elements of different fields compare unequal.
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.c_ == b.c_ && a.field_ == b.field_;
    }

    friend std::ostream& operator<<(std::ostream& os, const FieldElement& a);

private:
    void require_same_field(const FieldElement& o) const;

    FiniteField field_;
    Coords c_;
};

int quadratic_character(const FieldElement& a) noexcept;

inline int legendre_minus_one(const FiniteField& f) noexcept { return f.legendre_minus_one(); }

}  // namespace qsum

#endif  // QSUM_FIELD_HPP

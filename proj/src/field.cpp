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

#include "qsum/field.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace qsum {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::CharTwoOrThree: return "CharTwoOrThree";
        case Errc::Overflow: return "Overflow";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::DegreeTooLow: return "DegreeTooLow";
        case Errc::ZeroScale: return "ZeroScale";
        case Errc::NotMonicQuartic: return "NotMonicQuartic";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::WrongDegree: return "WrongDegree";
        case Errc::AllZero: return "AllZero";
        case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
        case Errc::NotSquareFree: return "NotSquareFree";
        case Errc::DegenerateParameters: return "DegenerateParameters";
        case Errc::ZeroParameter: return "ZeroParameter";
        case Errc::IdentityViolation: return "IdentityViolation";
        case Errc::NonResidue: return "NonResidue";
        case Errc::WrongResidueClass: return "WrongResidueClass";
        case Errc::LambdaZero: return "LambdaZero";
        case Errc::PIs19: return "PIs19";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownIdentity: return "UnknownIdentity";
        case Errc::UnknownExample: return "UnknownExample";
        case Errc::ConfigInvalid: return "ConfigInvalid";
        case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

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

// Dense polynomials over F_p, low-first, used only while searching for a
// modulus.  Trailing zeros are trimmed.
using PolyP = std::vector<u64>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyP mod_poly(PolyP a, const PolyP& m, u64 p) {
    trim(a);
    const u64 lead_inv = powmod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        const u64 c = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - m.size();
        for (std::size_t j = 0; j < m.size(); ++j)
            a[shift + j] = (a[shift + j] + p - mulmod(c, m[j], p)) % p;
        trim(a);
    }
    return a;
}

PolyP mulmod_poly(const PolyP& a, const PolyP& b, const PolyP& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return mod_poly(std::move(r), m, p);
}

// True iff the monic m has a root in F_p, via gcd(x^p - x, m).
bool has_root(const PolyP& m, u64 p) {
    PolyP base = mod_poly({0, 1}, m, p);
    PolyP acc = {1};
    for (u64 e = p; e; e >>= 1) {
        if (e & 1) acc = mulmod_poly(acc, base, m, p);
        base = mulmod_poly(base, base, m, p);
    }
    acc.resize(std::max<std::size_t>(acc.size(), 2), 0);
    acc[1] = (acc[1] + p - 1) % p;
    trim(acc);
    PolyP a = m, b = acc;
    while (!b.empty()) {
        PolyP r = mod_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() > 1;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit n.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre_symbol(std::int64_t a_signed, std::uint64_t n) noexcept {
    const auto sn = static_cast<std::int64_t>(n);
    u64 a = static_cast<u64>(((a_signed % sn) + sn) % sn);
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const u64 r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

FiniteField FiniteField::make(std::uint64_t p, int k) {
    if (p == 2 || p == 3) throw Error(Errc::CharTwoOrThree, "characteristic " + std::to_string(p) + " is excluded");
    if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (k < 1 || k > 3) throw Error(Errc::Overflow, "extension degree must be 1, 2 or 3");
    constexpr u64 limit = u64{1} << 63;
    u64 q = 1;
    for (int i = 0; i < k; ++i) {
        if (q > (limit - 1) / p) throw Error(Errc::Overflow, "p^k does not fit below 2^63");
        q *= p;
    }
    Coords modulus{};
    if (k > 1) {
        // Candidates in order of sum m_i p^i; roughly one in k is irreducible.
        PolyP m(static_cast<std::size_t>(k) + 1, 0);
        m[static_cast<std::size_t>(k)] = 1;
        for (u64 idx = 0;; ++idx) {
            u64 rest = idx;
            for (int i = 0; i < k; ++i) {
                m[static_cast<std::size_t>(i)] = rest % p;
                rest /= p;
            }
            if (m[0] == 0) continue;
            if (!has_root(m, p)) break;
        }
        for (int i = 0; i < k; ++i) modulus[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)];
    }
    return FiniteField(p, k, q, modulus);
}

Coords FiniteField::add(const Coords& a, const Coords& b) const noexcept {
    Coords r{};
    for (int i = 0; i < k_; ++i) {
        const u64 s = a[i] + b[i];
        r[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

Coords FiniteField::sub(const Coords& a, const Coords& b) const noexcept {
    Coords r{};
    for (int i = 0; i < k_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + (p_ - b[i]);
    return r;
}

Coords FiniteField::neg(const Coords& a) const noexcept {
    Coords r{};
    for (int i = 0; i < k_; ++i) r[i] = a[i] == 0 ? 0 : p_ - a[i];
    return r;
}

Coords FiniteField::mul(const Coords& a, const Coords& b) const noexcept {
    if (k_ == 1) return {mulmod(a[0], b[0]), 0, 0};
    std::array<u64, 5> t{};
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) t[i + j] = (t[i + j] + mulmod(a[i], b[j])) % p_;
    // t^k = -sum m_j t^j
    for (int d = 2 * k_ - 2; d >= k_; --d) {
        const u64 c = t[d];
        if (c == 0) continue;
        t[d] = 0;
        for (int j = 0; j < k_; ++j) {
            const u64 sub = mulmod(c, modulus_[j]);
            t[d - k_ + j] = t[d - k_ + j] >= sub ? t[d - k_ + j] - sub : t[d - k_ + j] + (p_ - sub);
        }
    }
    return {t[0], t[1], k_ == 3 ? t[2] : 0};
}

Coords FiniteField::pow(Coords a, std::uint64_t e) const noexcept {
    Coords r{1, 0, 0};
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Coords FiniteField::inv(const Coords& a) const {
    if (is_zero(a)) throw Error(Errc::DivisionByZero, "inverse of zero in " + name());
    return pow(a, q_ - 2);
}

int FiniteField::character(const Coords& a) const noexcept {
    if (k_ == 1) return legendre_symbol(static_cast<std::int64_t>(a[0]), p_);
    // sigma_q(a) = (N(a) / p), with the norm N(a) = det of multiplication by a.
    const Coords c0 = a, c1 = mul(a, Coords{0, 1, 0});
    u64 norm = 0;
    if (k_ == 2) {
        norm = (mulmod(c0[0], c1[1]) + p_ - mulmod(c1[0], c0[1])) % p_;
    } else {
        const Coords c2 = mul(c1, Coords{0, 1, 0});
        auto minor = [&](int r1, int r2, const Coords& x, const Coords& y) {
            return (mulmod(x[r1], y[r2]) + p_ - mulmod(y[r1], x[r2])) % p_;
        };
        norm = (mulmod(c0[0], minor(1, 2, c1, c2)) + p_ - mulmod(c0[1], minor(0, 2, c1, c2)) +
                mulmod(c0[2], minor(0, 1, c1, c2))) % p_;
    }
    return legendre_symbol(static_cast<std::int64_t>(norm), p_);
}

int FiniteField::character_by_euler(const Coords& a) const noexcept {
    if (is_zero(a)) return 0;
    const Coords r = pow(a, (q_ - 1) / 2);
    return r[0] == 1 ? 1 : -1;
}

Coords FiniteField::embed(std::int64_t n) const noexcept {
    const auto sp = static_cast<std::int64_t>(p_);
    return {static_cast<u64>(((n % sp) + sp) % sp), 0, 0};
}

Coords FiniteField::from_index(std::uint64_t i) const noexcept {
    Coords r{};
    for (int d = 0; d < k_; ++d) {
        r[d] = i % p_;
        i /= p_;
    }
    return r;
}

std::uint64_t FiniteField::index_of(const Coords& a) const noexcept {
    u64 idx = 0;
    for (int d = k_ - 1; d >= 0; --d) idx = idx * p_ + a[d];
    return idx;
}

FieldElement FiniteField::element(std::int64_t n) const { return {*this, embed(n)}; }
FieldElement FiniteField::at_index(std::uint64_t i) const { return {*this, from_index(i % q_)}; }
FieldElement FiniteField::zero() const { return {*this, Coords{}}; }
FieldElement FiniteField::one() const { return {*this, Coords{1, 0, 0}}; }
FieldElement FiniteField::generator() const { return {*this, k_ == 1 ? Coords{0, 0, 0} : Coords{0, 1, 0}}; }

int FiniteField::legendre_minus_one() const noexcept { return q_ % 4 == 1 ? 1 : -1; }

std::string FiniteField::name() const { return "F_" + std::to_string(q_); }

void FieldElement::require_same_field(const FieldElement& o) const {
    if (!(field_ == o.field_))
        throw Error(Errc::FieldMismatch, "operands in " + field_.name() + " and " + o.field_.name());
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    require_same_field(o);
    c_ = field_.add(c_, o.c_);
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    require_same_field(o);
    c_ = field_.sub(c_, o.c_);
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    require_same_field(o);
    c_ = field_.mul(c_, o.c_);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    require_same_field(o);
    c_ = field_.mul(c_, field_.inv(o.c_));
    return *this;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
    const int k = a.field().k();
    if (k == 1) return os << a.coords()[0];
    os << '(';
    for (int i = 0; i < k; ++i) os << (i ? "," : "") << a.coords()[static_cast<std::size_t>(i)];
    return os << ')';
}

int quadratic_character(const FieldElement& a) noexcept { return a.field().character(a.coords()); }

}  // namespace qsum

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

#ifndef QSUM_POLY_HPP
#define QSUM_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsum/field.hpp"

namespace qsum {

/// Dense univariate polynomial over a FiniteField.
///
/// Coefficients are stored low-order first with trailing zeros stripped, so
/// the zero polynomial has no coefficients and degree() == Poly::kZeroDegree.
class Poly {
public:
    /// Stand-in for deg 0 = -infinity.
    static constexpr int kZeroDegree = -1;

    explicit Poly(const FiniteField& field) : field_(field) {}
    Poly(const FiniteField& field, std::vector<Coords> low_first);

    /// Coefficients written the usual way, leading term first:
    /// from_ints(F, {1, 0, 1}) is x^2 + 1.
    static Poly from_ints(const FiniteField& field, std::span<const std::int64_t> high_first);
    static Poly from_ints(const FiniteField& field, std::initializer_list<std::int64_t> high_first) {
        return from_ints(field, std::span<const std::int64_t>(high_first.begin(), high_first.size()));
    }
    /// Elements listed leading term first; all must belong to `field`.
    static Poly from_elements(const FiniteField& field, std::initializer_list<FieldElement> high_first);
    static Poly constant(const FieldElement& c);
    /// c * x^degree
    static Poly monomial(const FieldElement& c, int degree);
    static Poly x(const FiniteField& field) { return monomial(field.one(), 1); }

    const FiniteField& field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == Coords{1, 0, 0}; }

    /// Coefficient of x^i; zero past the degree.
    FieldElement coeff(int i) const;
    FieldElement lead() const;
    std::span<const Coords> raw() const noexcept { return c_; }

    Coords eval_raw(const Coords& x) const noexcept {
        Coords acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
        return acc;
    }
    FieldElement operator()(const FieldElement& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const FieldElement& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
    friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }
    friend Poly operator*(std::int64_t n, Poly a) { return a *= a.field().element(n); }

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& f);

private:
    void trim() noexcept;
    void require_same_field(const Poly& o) const;

    FiniteField field_;
    std::vector<Coords> c_;
};

inline FieldElement eval(const Poly& f, const FieldElement& a) { return f(a); }

Poly derivative(const Poly& f);
Poly pow(Poly f, unsigned e);

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// True iff gcd(f, f') is constant.  Throws ZeroPolynomial.
bool is_square_free(const Poly& f);

/// Res(f, g) = lc(f)^deg(g) * prod g(r) over the roots r of f.
FieldElement resultant(const Poly& f, const Poly& g);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f), with f' taken at formal degree n - 1.
/// Throws DegreeTooLow when deg f < 2.
FieldElement discriminant(const Poly& f);

/// f(u x + v).  Throws ZeroScale when u = 0.
Poly affine_substitute(const Poly& f, const FieldElement& u, const FieldElement& v);

struct DepressedQuartic {
    Poly poly;
    FieldElement shift;
};

/// f(x + s) with s = -a3/4, which kills the cubic term of a monic quartic.
/// Throws NotMonicQuartic.
DepressedQuartic depress_quartic(const Poly& f);

/// Parses "1,14,24,14,1" (leading coefficient first, constant term last).
/// Throws ParseError.
Poly parse_poly(const FiniteField& field, std::string_view text);
std::string format_poly(const Poly& f);

}  // namespace qsum

#endif  // QSUM_POLY_HPP

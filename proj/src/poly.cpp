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

#include "qsum/poly.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace qsum {

Poly::Poly(const FiniteField& field, std::vector<Coords> low_first) : field_(field), c_(std::move(low_first)) {
    trim();
}

Poly Poly::from_ints(const FiniteField& field, std::span<const std::int64_t> high_first) {
    std::vector<Coords> c;
    c.reserve(high_first.size());
    for (auto it = high_first.rbegin(); it != high_first.rend(); ++it) c.push_back(field.embed(*it));
    return Poly(field, std::move(c));
}

Poly Poly::from_elements(const FiniteField& field, std::initializer_list<FieldElement> high_first) {
    std::vector<Coords> c;
    c.reserve(high_first.size());
    for (auto it = std::rbegin(high_first); it != std::rend(high_first); ++it) {
        if (!(it->field() == field)) throw Error(Errc::FieldMismatch, "coefficient outside " + field.name());
        c.push_back(it->coords());
    }
    return Poly(field, std::move(c));
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c.coords()}); }

Poly Poly::monomial(const FieldElement& c, int degree) {
    std::vector<Coords> v(static_cast<std::size_t>(degree) + 1, Coords{});
    v.back() = c.coords();
    return Poly(c.field(), std::move(v));
}

FieldElement Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return field_.zero();
    return {field_, c_[static_cast<std::size_t>(i)]};
}

FieldElement Poly::lead() const { return is_zero() ? field_.zero() : FieldElement(field_, c_.back()); }

FieldElement Poly::operator()(const FieldElement& x) const {
    if (!(x.field() == field_)) throw Error(Errc::FieldMismatch, "evaluation point outside " + field_.name());
    return {field_, eval_raw(x.coords())};
}

void Poly::trim() noexcept {
    while (!c_.empty() && FiniteField::is_zero(c_.back())) c_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
    if (!(field_ == o.field_))
        throw Error(Errc::FieldMismatch, "polynomials over " + field_.name() + " and " + o.field_.name());
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = field_.neg(c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coords{});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_field(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coords{});
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    require_same_field(o);
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Coords> r(c_.size() + o.c_.size() - 1, Coords{});
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const FieldElement& c) {
    if (!(c.field() == field_)) throw Error(Errc::FieldMismatch, "scalar outside " + field_.name());
    for (auto& x : c_) x = field_.mul(x, c.coords());
    trim();
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) {
    if (f.is_zero()) return os << '0';
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit = c == f.field().one();
        if (!unit || i == 0) os << c;
        if (i >= 1) os << 'x';
        if (i >= 2) os << '^' << i;
    }
    return os;
}

Poly derivative(const Poly& f) {
    const FiniteField& F = f.field();
    if (f.degree() < 1) return Poly(F);
    std::vector<Coords> d(static_cast<std::size_t>(f.degree()));
    for (int i = 1; i <= f.degree(); ++i)
        d[static_cast<std::size_t>(i - 1)] = F.mul(F.embed(i), f.raw()[static_cast<std::size_t>(i)]);
    return Poly(F, std::move(d));
}

Poly pow(Poly f, unsigned e) {
    Poly r = Poly::constant(f.field().one());
    while (e) {
        if (e & 1) r *= f;
        f *= f;
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    const FiniteField& F = a.field();
    if (!(b.field() == F)) throw Error(Errc::FieldMismatch, "divmod across fields");
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Coords> rem(a.raw().begin(), a.raw().end());
    if (a.degree() < b.degree()) return {Poly(F), a};
    std::vector<Coords> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Coords{});
    const Coords lead_inv = F.inv(b.raw().back());
    const auto bn = b.raw().size();
    for (std::size_t top = rem.size(); top >= bn; --top) {
        const Coords c = F.mul(rem[top - 1], lead_inv);
        const std::size_t shift = top - bn;
        quo[shift] = c;
        if (FiniteField::is_zero(c)) continue;
        for (std::size_t j = 0; j < bn; ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, b.raw()[j]));
    }
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * a.lead().inv();
}

bool is_square_free(const Poly& f) {
    if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "square-freeness of the zero polynomial");
    return gcd(f, derivative(f)).degree() == 0;
}

FieldElement resultant(const Poly& f, const Poly& g) {
    const FiniteField& F = f.field();
    if (!(g.field() == F)) throw Error(Errc::FieldMismatch, "resultant across fields");
    if (f.is_zero() || g.is_zero()) return F.zero();
    const auto m = static_cast<unsigned>(f.degree());
    const auto n = static_cast<unsigned>(g.degree());
    if (n == 0) return g.lead().pow(m);
    if (m == 0) return f.lead().pow(n);
    const Poly r = divmod(f, g).second;
    if (r.is_zero()) return F.zero();
    FieldElement out = g.lead().pow(m - static_cast<unsigned>(r.degree())) * resultant(g, r);
    if ((m * n) % 2 == 1) out = -out;
    return out;
}

FieldElement discriminant(const Poly& f) {
    const int n = f.degree();
    if (n < 2) throw Error(Errc::DegreeTooLow, "discriminant needs degree >= 2");
    const Poly df = derivative(f);
    if (df.is_zero()) return f.field().zero();
    // Formal degree n - 1 for f' when p divides n.
    FieldElement res = f.lead().pow(static_cast<unsigned>(n - 1 - df.degree())) * resultant(f, df);
    if ((n * (n - 1) / 2) % 2 == 1) res = -res;
    return res / f.lead();
}

Poly affine_substitute(const Poly& f, const FieldElement& u, const FieldElement& v) {
    if (u.is_zero()) throw Error(Errc::ZeroScale, "substitution x -> u x + v needs u != 0");
    const FiniteField& F = f.field();
    const Poly lin = Poly::from_elements(F, {u, v});
    Poly acc(F);
    for (int i = f.degree(); i >= 0; --i) acc = acc * lin + Poly::constant(f.coeff(i));
    return acc;
}

DepressedQuartic depress_quartic(const Poly& f) {
    if (f.degree() != 4 || !f.is_monic()) throw Error(Errc::NotMonicQuartic, "expected a monic quartic");
    const FiniteField& F = f.field();
    const FieldElement shift = -(f.coeff(3) / F.element(4));
    return {affine_substitute(f, F.one(), shift), shift};
}

Poly parse_poly(const FiniteField& field, std::string_view text) {
    std::vector<std::int64_t> vals;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw Error(Errc::ParseError, "bad coefficient '" + std::string(tok) + "' in \"" + std::string(text) + "\"");
        vals.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Poly::from_ints(field, vals);
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (int i = f.degree(); i >= 0; --i) os << (i == f.degree() ? "" : ",") << f.coeff(i);
    return os.str();
}

}  // namespace qsum

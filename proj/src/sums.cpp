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

#include "qsum/sums.hpp"

#include <cstdlib>
#include <string>

namespace qsum {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("QSUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0)
            throw Error(Errc::ConfigInvalid, "QSUM_BUDGET must be a positive integer, got '" + std::string(env) + "'");
        b.max_q = v;
    }
    return b;
}

void Budget::check(const FiniteField& field) const {
    if (field.q() > max_q)
        throw Error(Errc::BudgetExceeded,
                    "q = " + std::to_string(field.q()) + " exceeds brute-force budget " + std::to_string(max_q));
}

CharSum char_sum(const Poly& f, const Budget& budget) {
    const FiniteField& F = f.field();
    budget.check(F);
    std::int64_t s = 0;
    if (!f.is_zero()) {
        for (std::uint64_t i = 0; i < F.q(); ++i) s += F.character(f.eval_raw(F.from_index(i)));
    }
    return {s, F.q(), f};
}

std::int64_t sigma_sum(const Poly& f, const Budget& budget) { return char_sum(f, budget).value; }

std::int64_t closed_form_low_degree(const Poly& f) {
    if (!f.is_monic() || (f.degree() != 1 && f.degree() != 2))
        throw Error(Errc::WrongDegree, "closed form needs a monic polynomial of degree 1 or 2");
    if (f.degree() == 1) return 0;
    const FieldElement b = f.coeff(1), c = f.coeff(0);
    if ((b * b - 4 * c).is_zero()) return static_cast<std::int64_t>(f.field().q()) - 1;
    return -1;
}

std::uint64_t point_count(const Poly& f, const Budget& budget) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(f.field().q()) + char_sum(f, budget).value);
}

std::uint64_t zero_count(const Poly& f, const Budget& budget) {
    const FiniteField& F = f.field();
    budget.check(F);
    if (f.is_zero()) return F.q();
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < F.q(); ++i) n += FiniteField::is_zero(f.eval_raw(F.from_index(i)));
    return n;
}

std::uint64_t common_zero_count(const Poly& f, const Poly& g, const Poly& h, const Budget& budget) {
    const FiniteField& F = f.field();
    if (!(g.field() == F) || !(h.field() == F)) throw Error(Errc::FieldMismatch, "common zeros across fields");
    budget.check(F);
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < F.q(); ++i) {
        const Coords x = F.from_index(i);
        n += FiniteField::is_zero(f.eval_raw(x)) && FiniteField::is_zero(g.eval_raw(x)) &&
             FiniteField::is_zero(h.eval_raw(x));
    }
    return n;
}

std::uint64_t quadratic_in_y_count(const Poly& f, const Poly& g, const Poly& h, const Budget& budget) {
    if (f.is_zero() && g.is_zero() && h.is_zero()) throw Error(Errc::AllZero, "f = g = h = 0");
    const auto q = static_cast<std::int64_t>(f.field().q());
    const auto n_fgh = static_cast<std::int64_t>(common_zero_count(f, g, h, budget));
    const auto n_f = static_cast<std::int64_t>(zero_count(f, budget));
    const std::int64_t s = char_sum(g * g - 4 * (f * h), budget).value;
    return static_cast<std::uint64_t>(q * (1 + n_fgh) - n_f + s);
}

}  // namespace qsum

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

#ifndef QSUM_SUMS_HPP
#define QSUM_SUMS_HPP

#include <cstdint>

#include "qsum/poly.hpp"

namespace qsum {

/// Upper bound on q for anything that enumerates F_q.  Enumeration is the
/// whole method here, so a call with q near 2^61 must fail fast instead of
/// running forever.
struct Budget {
    static constexpr std::uint64_t kDefaultMaxQ = std::uint64_t{1} << 20;
    std::uint64_t max_q = kDefaultMaxQ;

    /// kDefaultMaxQ, or the value of QSUM_BUDGET when set and valid.
    static Budget from_env();
    /// Throws BudgetExceeded.
    void check(const FiniteField& field) const;
};

struct CharSum {
    std::int64_t value;
    std::uint64_t q;
    Poly f;
};

/// sum_{x in F_q} sigma(f(x)) by full enumeration.  The zero polynomial
/// sums to 0.
CharSum char_sum(const Poly& f, const Budget& budget = {});

/// Shorthand for char_sum(f, budget).value.
std::int64_t sigma_sum(const Poly& f, const Budget& budget = {});

/// Degree 1 -> 0; degree 2 -> -1, or q - 1 when f is a perfect square.
/// Throws WrongDegree for any other degree or a non-monic f.
std::int64_t closed_form_low_degree(const Poly& f);

/// #{(x, y) : y^2 = f(x)} = q + char_sum(f).
std::uint64_t point_count(const Poly& f, const Budget& budget = {});

/// n_f: number of roots in F_q; q for the zero polynomial.
std::uint64_t zero_count(const Poly& f, const Budget& budget = {});

/// n_{f,g,h}: number of x with f(x) = g(x) = h(x) = 0.
std::uint64_t common_zero_count(const Poly& f, const Poly& g, const Poly& h, const Budget& budget = {});

/// #{(x, y) : f(x) y^2 + g(x) y + h(x) = 0} via
///   q (1 + n_{f,g,h}) - n_f + sum_x sigma(g^2 - 4 f h).
/// Throws AllZero when f = g = h = 0.
std::uint64_t quadratic_in_y_count(const Poly& f, const Poly& g, const Poly& h, const Budget& budget = {});

}  // namespace qsum

#endif  // QSUM_SUMS_HPP

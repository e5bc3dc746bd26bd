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

#include "doctest.h"

#include "oracle.hpp"
#include "qsum/closed_forms.hpp"

using namespace qsum;

namespace {

Errc code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::IoError;
}

// All (A, B) with A >= 0, B > 0 and A^2 + d B^2 = n.
std::vector<std::pair<std::int64_t, std::int64_t>> representations(std::int64_t n, std::int64_t d) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t b = 1; d * b * b <= n; ++b)
        for (std::int64_t a = 0; a * a + d * b * b <= n; ++a)
            if (a * a + d * b * b == n) out.emplace_back(a, b);
    return out;
}

}  // namespace

TEST_CASE("Tonelli-Shanks") {
    CHECK(tonelli_shanks(4, 7) == 2);
    CHECK(tonelli_shanks(2, 7) == 3);
    CHECK(tonelli_shanks(0, 7) == 0);
    CHECK(code_of([] { tonelli_shanks(5, 7); }) == Errc::NonResidue);
    for (auto p : oracle::primes_between(5, 3000)) {
        for (std::int64_t a = 1; a < std::min<std::int64_t>(p, 60); ++a) {
            if (oracle::legendre(a, p) != 1) continue;
            const std::uint64_t r = tonelli_shanks(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(p));
            if (oracle::mod(static_cast<std::int64_t>(r * r), p) != a || 2 * r > static_cast<std::uint64_t>(p))
                FAIL("p = " << p << ", a = " << a << ", r = " << r);
        }
    }
}

TEST_CASE("Cornacchia examples") {
    const QuadFormRep r7 = cornacchia(7);
    CHECK(r7.a == 2);
    CHECK(r7.b == 1);
    CHECK(r7.d == 3);
    CHECK(r7.form == QuadFormRep::Form::P);
    const QuadFormRep r13 = cornacchia(13);
    CHECK(r13.a == -1);
    CHECK(r13.b == 2);
    CHECK(code_of([] { cornacchia(5); }) == Errc::WrongResidueClass);
    CHECK(code_of([] { cornacchia(9); }) == Errc::NotPrime);

    const QuadFormRep s5 = cornacchia_4p(5);
    CHECK(s5.a == 1);
    CHECK(s5.b == 1);
    CHECK(s5.form == QuadFormRep::Form::FourP);
    CHECK(cornacchia_4p(7).a == 3);
    CHECK(cornacchia_4p(7).b == 1);
    CHECK(code_of([] { cornacchia_4p(13); }) == Errc::WrongResidueClass);
    CHECK(code_of([] { cornacchia_4p(19); }) == Errc::WrongResidueClass);
}

TEST_CASE("Cornacchia matches exhaustive search for p <= 10^4") {
    for (auto p : oracle::primes_between(5, 10000)) {
        const auto up = static_cast<std::uint64_t>(p);
        if (p % 3 == 1) {
            const auto reps = representations(p, 3);
            REQUIRE(reps.size() == 1);
            const QuadFormRep r = cornacchia(up);
            CHECK(r.represents(up));
            CHECK(std::llabs(r.a) == reps[0].first);
            CHECK(r.b == reps[0].second);
            CHECK(oracle::mod(r.a, 3) == 2);
        } else {
            CHECK(code_of([&] { cornacchia(up); }) == Errc::WrongResidueClass);
        }
        if (p != 19 && oracle::legendre(p, 19) == 1) {
            const auto reps = representations(4 * p, 19);
            REQUIRE(reps.size() == 1);
            const QuadFormRep r = cornacchia_4p(up);
            CHECK(r.represents(up));
            CHECK(r.a == reps[0].first);
            CHECK(r.b == reps[0].second);
            // (A/19) A does not depend on the sign of A.
            CHECK(oracle::legendre(r.a, 19) * r.a == oracle::legendre(-r.a, 19) * (-r.a));
        } else {
            CHECK(code_of([&] { cornacchia_4p(up); }) == Errc::WrongResidueClass);
        }
    }
}

TEST_CASE("cubic Jacobsthal sum") {
    CHECK(jacobsthal_cubic(7) == 4);
    CHECK(jacobsthal_cubic(11) == 0);
    CHECK(jacobsthal_cubic(13) == -2);
    for (auto p : oracle::primes_between(5, 2000))
        CHECK(jacobsthal_cubic(static_cast<std::uint64_t>(p)) == oracle::char_sum({1, 0, 0, 1}, p));
}

TEST_CASE("RPR cubic family") {
    CHECK(rpr_cubic(5, 1) == -1);
    CHECK(rpr_cubic(13, 1) == 0);
    CHECK(rpr_cubic(13, 5) == 0);
    CHECK(rpr_cubic(7, 1) == oracle::legendre(2, 7) * oracle::legendre(3, 19) * 3);
    CHECK(code_of([] { rpr_cubic(19, 1); }) == Errc::PIs19);
    CHECK(code_of([] { rpr_cubic(7, 0); }) == Errc::LambdaZero);
    CHECK(code_of([] { rpr_cubic(7, 14); }) == Errc::LambdaZero);

    const FiniteField F = make_field(11);
    CHECK(rpr_poly(F, 2) == Poly::from_ints(F, {1, 0, -608, 5776}));

    for (auto p : oracle::primes_between(5, 2000)) {
        if (p == 19) continue;
        for (std::int64_t lambda : {1, 2, -3, 7}) {
            if (lambda % p == 0) continue;
            const std::int64_t expected =
                oracle::char_sum({1, 0, -152 * lambda * lambda, 722 * lambda * lambda * lambda}, p);
            if (rpr_cubic(static_cast<std::uint64_t>(p), lambda) != expected)
                FAIL("p = " << p << ", lambda = " << lambda);
        }
    }
}

TEST_CASE("first worked quartic") {
    CHECK(example_1(7) == 3);
    CHECK(example_1(11) == -1);
    CHECK(example_1(13) == -1 + oracle::legendre(2, 13) * 2 * -1);
    for (auto p : oracle::primes_between(5, 2000)) {
        const auto up = static_cast<std::uint64_t>(p);
        const std::int64_t s = oracle::char_sum({1, 14, 24, 14, 1}, p);
        CHECK(example_1(up) == s);
        CHECK(sigma_sum(example_1_poly(make_field(up))) == s);
        if (p % 3 == 2) CHECK(s == -1);
    }
    for (auto p : {5ULL, 7ULL, 13ULL, 97ULL, 499ULL}) CHECK(example_1_derivation(p));
}

TEST_CASE("second worked quartic") {
    CHECK(example_2(19) == 18);
    CHECK(example_2(5) == 0);
    CHECK(example_2(13) == -1);
    for (auto p : oracle::primes_between(5, 2000)) {
        const auto up = static_cast<std::uint64_t>(p);
        const std::int64_t s = oracle::char_sum({1, 8, 24, -44, 16}, p);
        CHECK(example_2(up) == s);
        CHECK(sigma_sum(example_2_poly(make_field(up))) == s);
    }
    for (auto p : {5ULL, 7ULL, 19ULL, 23ULL, 499ULL}) CHECK(example_2_derivation(p));
}

TEST_CASE("third worked quartic") {
    CHECK(example_3(5));
    CHECK(example_3(7));
    CHECK(example_3(499));
}

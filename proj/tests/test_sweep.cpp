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

#include <sstream>

#include "json.hpp"
#include "qsum/sweep.hpp"

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

SweepConfig small(const std::string& identity) {
    SweepConfig c;
    c.identity = identity;
    c.primes = {5, 23};
    c.trials_per_field = 5;
    c.seed = 7;
    c.threads = 2;
    return c;
}

}  // namespace

TEST_CASE("prime ranges") {
    CHECK(parse_prime_range("5..199").lo == 5);
    CHECK(parse_prime_range("5..199").hi == 199);
    CHECK(parse_prime_range("37").lo == 37);
    CHECK(parse_prime_range("37").hi == 37);
    for (const char* bad : {"", "..", "5..", "a..9", "5...9", "-5..9"})
        CHECK(code_of([&] { parse_prime_range(bad); }) == Errc::ParseError);
    CHECK(primes_in({5, 30}) == std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_in({24, 28}).empty());
}

TEST_CASE("sweep configuration is validated") {
    SweepConfig c = small("jacobsthal");
    c.validate();
    c.primes = {3, 20};
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);
    c = small("jacobsthal");
    c.trials_per_field = 0;
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);
    c = small("jacobsthal");
    c.extension_degrees = {4};
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);
    c = small("jacobsthal");
    c.primes = {24, 28};
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);
    c = small("jacobsthal");
    c.budget.max_q = 20;
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);

    c = small("no-such-identity");
    CHECK(code_of([&] { run_verify(c); }) == Errc::UnknownIdentity);

    c = small("jacobsthal");
    c.extension_degrees = {1, 2};
    c.primes = {5, 7};
    std::vector<std::uint64_t> qs;
    for (const auto& F : c.fields()) qs.push_back(F.q());
    CHECK(qs == std::vector<std::uint64_t>{5, 7, 25, 49});
}

TEST_CASE("every registered identity passes a small sweep") {
    for (const std::string& id : known_identities()) {
        CAPTURE(id);
        SweepConfig c = small(id);
        if (id == "master" || id == "nagao" || id == "remark-pipeline") c.primes = {5, 13};
        const SweepReport r = run_verify(c);
        CHECK(r.failures == 0);
        CHECK(r.total() == r.cases.size());
        CHECK(r.total() > 0);
        for (std::size_t i = 1; i < r.cases.size(); ++i) CHECK(r.cases[i - 1].field_q <= r.cases[i].field_q);
    }
}

TEST_CASE("reports are deterministic for a seed") {
    auto render = [](const SweepConfig& c) {
        std::ostringstream os;
        write_csv(run_verify(c), os);
        return os.str();
    };
    SweepConfig a = small("general-descent");
    a.extension_degrees = {1, 2};
    a.primes = {5, 11};
    SweepConfig b = a;
    b.threads = 1;
    const std::string first = render(a);
    CHECK(first == render(a));
    CHECK(first == render(b));
    SweepConfig c = a;
    c.seed = 8;
    CHECK(first != render(c));
    CHECK(first.rfind("field_q,identity,params,lhs,rhs,pass\n", 0) == 0);

    std::ostringstream js;
    const SweepReport r = run_verify(a);
    write_json(r, js);
    const auto parsed = nlohmann::json::parse(js.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == r.cases.size());
    for (std::size_t i = 0; i < r.cases.size(); ++i) {
        CHECK(parsed[i]["field_q"].get<std::uint64_t>() == r.cases[i].field_q);
        CHECK(parsed[i]["identity"].get<std::string>() == r.cases[i].identity);
        CHECK(parsed[i]["params"].get<std::string>() == r.cases[i].params);
        CHECK(parsed[i]["lhs"].get<std::int64_t>() == r.cases[i].lhs);
        CHECK(parsed[i]["rhs"].get<std::int64_t>() == r.cases[i].rhs);
        CHECK(parsed[i]["pass"].get<bool>() == r.cases[i].pass);
    }
}

TEST_CASE("random draws") {
    const FiniteField F = make_field(101);
    auto r1 = field_rng(42, 101), r2 = field_rng(42, 101), r3 = field_rng(42, 103);
    CHECK(random_element(F, r1) == random_element(F, r2));
    CHECK(r1() != r3());
}

TEST_CASE("tables") {
    CHECK(code_of([] { run_table("ex9", {5, 20}); }) == Errc::UnknownExample);
    CHECK(code_of([] { run_table("ex1", {2, 20}); }) == Errc::ConfigInvalid);

    const auto ex2 = run_table("ex2", {5, 100});
    bool saw19 = false;
    for (const TableRow& r : ex2) {
        CHECK(r.match);
        CHECK(r.closed_form == r.brute_force);
        if (r.p == 19) {
            saw19 = true;
            CHECK(r.closed_form == 18);
        }
    }
    CHECK(saw19);

    for (const std::string& ex : known_examples()) {
        CAPTURE(ex);
        const auto rows = run_table(ex, {5, 200}, 2);
        CHECK_FALSE(rows.empty());
        for (const TableRow& r : rows) CHECK(r.match);
    }
    for (const TableRow& r : run_table("rpr", {5, 60}, 7)) CHECK(r.p != 7);

    std::ostringstream csv, js;
    const auto rows = run_table("ex1", {5, 13});
    write_table_csv(rows, csv);
    CHECK(csv.str() == "p,closed_form,brute_force,match\n5,-1,-1,true\n7,3,3,true\n11,-1,-1,true\n13,1,1,true\n");
    write_table_json(rows, js);
    const auto parsed = nlohmann::json::parse(js.str());
    CHECK(parsed.size() == 4);
    CHECK(parsed[1]["closed_form"].get<int>() == 3);
}

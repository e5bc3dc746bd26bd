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

#ifndef QSUM_SWEEP_HPP
#define QSUM_SWEEP_HPP

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsum/sums.hpp"

namespace qsum {

struct PrimeRange {
    std::uint64_t lo = 5;
    std::uint64_t hi = 5;
};

/// "5..199" or a single "37".  Throws ParseError.
PrimeRange parse_prime_range(std::string_view text);

/// Primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(const PrimeRange& range);

struct SweepConfig {
    PrimeRange primes{5, 50};
    std::vector<int> extension_degrees{1};
    std::uint64_t trials_per_field = 50;
    std::uint64_t seed = 42;
    std::string identity;
    Budget budget{};
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    /// Throws ConfigInvalid: lo < 5, empty range, trials = 0, degrees outside
    /// {1,2,3}, or a field in the sweep larger than the budget.
    void validate() const;
    /// F_{p^k} for every prime in range and every degree, ordered by q.
    std::vector<FiniteField> fields() const;
};

struct SweepCase {
    std::uint64_t field_q;
    std::string identity;
    std::string params;
    std::int64_t lhs;
    std::int64_t rhs;
    bool pass;
};

struct SweepReport {
    std::vector<SweepCase> cases;
    std::uint64_t passes = 0;
    std::uint64_t failures = 0;
    double wall_seconds = 0.0;

    std::uint64_t total() const noexcept { return passes + failures; }
};

/// Names accepted by run_verify.
const std::vector<std::string>& known_identities();

/// Generator for one field's parameter draws.  mt19937_64 seeded with
/// seed ^ (q * 0x9E3779B97F4A7C15); elements are drawn as index (x mod q).
std::mt19937_64 field_rng(std::uint64_t seed, std::uint64_t q);
FieldElement random_element(const FiniteField& field, std::mt19937_64& rng);

/// Throws UnknownIdentity or ConfigInvalid.  Cases are ordered by
/// (q, case index) whatever the thread count.
SweepReport run_verify(const SweepConfig& config);

/// Columns field_q,identity,params,lhs,rhs,pass.
void write_csv(const SweepReport& report, std::ostream& os);
/// Array of records with the same keys as the CSV columns.
void write_json(const SweepReport& report, std::ostream& os);

struct TableRow {
    std::uint64_t p;
    std::int64_t closed_form;
    std::int64_t brute_force;
    bool match;
};

/// Names accepted by run_table: ex1, ex2, ex3, jacobsthal-cubic, rpr.
const std::vector<std::string>& known_examples();

/// One row per admissible prime.  rpr skips p = 19 and primes dividing
/// lambda.  Throws UnknownExample or ConfigInvalid.
std::vector<TableRow> run_table(std::string_view example, const PrimeRange& primes, std::int64_t lambda = 2,
                                const Budget& budget = {});

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& os);
void write_table_json(const std::vector<TableRow>& rows, std::ostream& os);

}  // namespace qsum

#endif  // QSUM_SWEEP_HPP

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

// qsum: evaluate quadratic character sums and check transformation formulas
// by enumeration.
//
//   qsum eval   --p 7 --poly 1,14,24,14,1
//   qsum eval   --p 7 --matrix 0,1,0,1,0,1,0,2,3
//   qsum verify --identity general-descent --primes 5..199 --trials 50 --seed 42
//   qsum table  --example ex2 --primes 5..500 --format json
//
// QSUM_BUDGET overrides the largest q any command will enumerate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qsum/master.hpp"
#include "qsum/sweep.hpp"

namespace {

int emit(const std::string& text, const std::string& out_path) {
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw qsum::Error(qsum::Errc::IoError, "cannot open " + out_path);
        f << text;
        if (!f) throw qsum::Error(qsum::Errc::IoError, "write failed for " + out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic character sums over finite fields"};
    app.require_subcommand(1);

    std::uint64_t budget_flag = 0;
    app.add_option("--budget", budget_flag, "Largest q to enumerate (overrides QSUM_BUDGET)");

    std::uint64_t p = 0;
    int k = 1;
    std::string poly_text;
    std::vector<std::int64_t> matrix;
    auto* eval = app.add_subcommand("eval", "Print sum sigma(f(x)) and the point count of y^2 = f(x)");
    eval->add_option("--p", p, "Characteristic")->required();
    eval->add_option("--k", k, "Extension degree (1-3)");
    auto* poly_opt = eval->add_option("--poly", poly_text, "Coefficients, leading first, e.g. 1,14,24,14,1");
    auto* matrix_opt = eval->add_option("--matrix", matrix, "Coefficient matrix, nine values row-major")
                           ->delimiter(',')
                           ->expected(9);
    poly_opt->excludes(matrix_opt);

    qsum::SweepConfig cfg;
    std::string primes_text = "5..50";
    std::string format = "csv";
    std::string out_path;
    auto* verify = app.add_subcommand("verify", "Check an identity over a sweep of fields");
    verify->add_option("--identity", cfg.identity, "Identity name")->required();
    verify->add_option("--primes", primes_text, "Prime range lo..hi");
    verify->add_option("--k", cfg.extension_degrees, "Extension degrees")->delimiter(',');
    verify->add_option("--trials", cfg.trials_per_field, "Random draws per field");
    verify->add_option("--seed", cfg.seed, "Seed for parameter draws");
    verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    verify->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", out_path, "Also write the report to this file");

    std::string example;
    std::int64_t lambda = 2;
    auto* table = app.add_subcommand("table", "Closed form against enumeration, one row per prime");
    table->add_option("--example", example, "ex1, ex2, ex3, jacobsthal-cubic or rpr")->required();
    table->add_option("--primes", primes_text, "Prime range lo..hi");
    table->add_option("--lambda", lambda, "lambda for the rpr family");
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", out_path, "Also write the table to this file");

    CLI11_PARSE(app, argc, argv);
    try {
        qsum::Budget budget = qsum::Budget::from_env();
        if (budget_flag) budget.max_q = budget_flag;
        if (*eval) {
            const qsum::FiniteField F = qsum::make_field(p, k);
            if (poly_text.empty() && matrix.empty())
                throw qsum::Error(qsum::Errc::ConfigInvalid, "eval needs --poly or --matrix");
            if (!matrix.empty()) {
                const qsum::MasterSides m = qsum::master_sides(qsum::CoeffMatrix3::from_ints(F, matrix), budget);
                std::cout << "lhs = " << m.lhs << "\nrhs = " << m.rhs << "\nbrute = " << m.brute << '\n';
                return m.consistent() ? 0 : 1;
            }
            const qsum::Poly f = qsum::parse_poly(F, poly_text);
            const qsum::CharSum s = qsum::char_sum(f, budget);
            std::cout << "S = " << s.value << "\npoints = " << qsum::point_count(f, budget) << '\n';
            return 0;
        }
        if (*verify) {
            cfg.primes = qsum::parse_prime_range(primes_text);
            cfg.budget = budget;
            const qsum::SweepReport report = qsum::run_verify(cfg);
            std::ostringstream os;
            format == "json" ? qsum::write_json(report, os) : qsum::write_csv(report, os);
            emit(os.str(), out_path);
            std::cerr << cfg.identity << ": " << report.passes << "/" << report.total() << " passed, "
                      << report.failures << " failed (" << report.wall_seconds << " s)\n";
            return report.failures == 0 ? 0 : 1;
        }
        if (*table) {
            const auto rows = qsum::run_table(example, qsum::parse_prime_range(primes_text), lambda, budget);
            std::ostringstream os;
            format == "json" ? qsum::write_table_json(rows, os) : qsum::write_table_csv(rows, os);
            emit(os.str(), out_path);
            for (const auto& r : rows)
                if (!r.match) return 1;
            return 0;
        }
    } catch (const qsum::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

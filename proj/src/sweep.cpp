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

#include "qsum/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qsum/closed_forms.hpp"
#include "qsum/master.hpp"
#include "qsum/transforms.hpp"

namespace qsum {

namespace {

using E = FieldElement;
using Rng = std::mt19937_64;

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error(Errc::ParseError, "bad prime range \"" + std::string(whole) + "\"");
    return v;
}

std::string describe(std::initializer_list<std::pair<const char*, E>> params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, v] : params) {
        os << (first ? "" : " ") << name << '=' << v;
        first = false;
    }
    return os.str();
}

bool redraw(const Error& e) {
    switch (e.code()) {
        case Errc::NotSquareFree:
        case Errc::DegenerateDiscriminant:
        case Errc::DegenerateParameters:
        case Errc::ZeroParameter:
        case Errc::AllZero:
            return true;
        default:
            return false;
    }
}

// One draw of an identity's parameters and the check it implies.  Throws
// one of the redraw() codes when the draw is outside the identity's domain.
using CaseFn = std::function<SweepCase(const FiniteField&, Rng&, const Budget&)>;

SweepCase make_case(const FiniteField& F, const char* id, std::string params, std::int64_t lhs, std::int64_t rhs,
                    bool extra = true) {
    return {F.q(), id, std::move(params), lhs, rhs, extra && lhs == rhs};
}

Poly random_poly(const FiniteField& F, Rng& rng, int max_degree) {
    std::vector<Coords> c;
    for (int i = 0; i <= max_degree; ++i) c.push_back(random_element(F, rng).coords());
    return Poly(F, std::move(c));
}

std::uint64_t direct_quadratic_count(const Poly& f, const Poly& g, const Poly& h) {
    const FiniteField& F = f.field();
    std::uint64_t n = 0;
    for (std::uint64_t i = 0; i < F.q(); ++i) {
        const Coords x = F.from_index(i);
        const Coords a = f.eval_raw(x), b = g.eval_raw(x), c = h.eval_raw(x);
        for (std::uint64_t j = 0; j < F.q(); ++j) {
            const Coords y = F.from_index(j);
            n += FiniteField::is_zero(F.add(F.mul(F.add(F.mul(a, y), b), y), c));
        }
    }
    return n;
}

const std::map<std::string, CaseFn, std::less<>>& registry() {
    static const std::map<std::string, CaseFn, std::less<>> r = {
        {"jacobsthal",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E b = random_element(F, rng), c = random_element(F, rng);
             const Verification v = verify(jacobsthal_pair(b, c), bu);
             return make_case(F, "jacobsthal", describe({{"b", b}, {"c", c}}), v.lhs, v.rhs);
         }},
        {"leprevost-morain",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E a = random_element(F, rng);
             const Verification v = verify(leprevost_morain(a), bu);
             return make_case(F, "leprevost-morain", describe({{"a", a}}), v.lhs, v.rhs);
         }},
        {"biquadratic",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E b = random_element(F, rng), c = random_element(F, rng);
             const Verification v = verify(descend_biquadratic(b, c), bu);
             return make_case(F, "biquadratic", describe({{"b", b}, {"c", c}}), v.lhs, v.rhs);
         }},
        {"product",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E b1 = random_element(F, rng), c1 = random_element(F, rng);
             const E b2 = random_element(F, rng), c2 = random_element(F, rng);
             const Verification v = verify(descend_product(b1, c1, b2, c2), bu);
             return make_case(F, "product", describe({{"b1", b1}, {"c1", c1}, {"b2", b2}, {"c2", c2}}), v.lhs, v.rhs);
         }},
        {"general-descent",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E a3 = random_element(F, rng), a2 = random_element(F, rng);
             const E a1 = random_element(F, rng), a0 = random_element(F, rng);
             const Verification v = verify(descend_quartic(a3, a2, a1, a0), bu);
             return make_case(F, "general-descent", describe({{"a3", a3}, {"a2", a2}, {"a1", a1}, {"a0", a0}}), v.lhs,
                              v.rhs);
         }},
        {"depressed-descent",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
             const TransformResult t = descend_depressed(a, b, c);
             const Verification v = verify(t, bu);
             const bool same = t.target == descend_quartic(F.zero(), a, b, c).target;
             return make_case(F, "depressed-descent", describe({{"a", a}, {"b", b}, {"c", c}}), v.lhs, v.rhs, same);
         }},
        {"symmetric",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E a = random_element(F, rng), b = random_element(F, rng), c = random_element(F, rng);
             const Verification v = verify(symmetric_quartic_pair(a, b, c), bu);
             return make_case(F, "symmetric", describe({{"a", a}, {"b", b}, {"c", c}}), v.lhs, v.rhs);
         }},
        {"cubic-cubic",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E a = random_element(F, rng), b = random_element(F, rng);
             const Verification v = verify(cubic_cubic_pair(a, b), bu);
             return make_case(F, "cubic-cubic", describe({{"a", a}, {"b", b}}), v.lhs, v.rhs);
         }},
        {"pi-identity",
         [](const FiniteField& F, Rng& rng, const Budget&) {
             const E b1 = random_element(F, rng), c1 = random_element(F, rng);
             const E b2 = random_element(F, rng), c2 = random_element(F, rng);
             const PiIdentity pi = product_discriminant_identity(b1, c1, b2, c2);
             const ProductParams pp = product_params(b1, c1, b2, c2);
             const E lhs = 16 * pi.pi;
             const E rhs = pp.big_b * pp.big_b - 4 * (pp.delta1 * pp.delta2);
             return make_case(F, "pi-identity", describe({{"b1", b1}, {"c1", c1}, {"b2", b2}, {"c2", c2}}),
                              static_cast<std::int64_t>(lhs.index()), static_cast<std::int64_t>(rhs.index()),
                              pi.check);
         }},
        {"remark-pipeline",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E b1 = random_element(F, rng), c1 = random_element(F, rng);
             const E b2 = random_element(F, rng), c2 = random_element(F, rng);
             const bool ok = remark_pipeline(b1, c1, b2, c2, bu);
             const Verification v = verify(descend_product(b1, c1, b2, c2), bu);
             return make_case(F, "remark-pipeline", describe({{"b1", b1}, {"c1", c1}, {"b2", b2}, {"c2", c2}}), v.lhs,
                              v.rhs, ok);
         }},
        {"nagao",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const E a3 = random_element(F, rng), a2 = random_element(F, rng);
             const E a1 = random_element(F, rng), a0 = random_element(F, rng);
             const NagaoCheck n = nagao_map_check(a3, a2, a1, a0, bu);
             return make_case(F, "nagao", describe({{"a3", a3}, {"a2", a2}, {"a1", a1}, {"a0", a0}}),
                              static_cast<std::int64_t>(n.mapped), static_cast<std::int64_t>(n.total));
         }},
        {"zhang",
         [](const FiniteField& F, Rng&, const Budget& bu) {
             const Poly lhs = Poly::from_ints(F, {1, 0, 1}) * Poly::from_ints(F, {1, 4, 1});
             const std::int64_t l = sigma_sum(lhs, bu);
             const std::int64_t r = -1 + F.legendre_minus_one() * sigma_sum(Poly::from_ints(F, {1, 1, 1, 0}), bu);
             return make_case(F, "zhang", "", l, r, zhang_identity(F, bu));
         }},
        {"master",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             CoeffMatrix3 m(F);
             for (int r = 0; r < 3; ++r)
                 for (int c = 0; c < 3; ++c) m.set(r, c, random_element(F, rng));
             // One draw in four is made degenerate by clearing a row or a column.
             const auto shape = rng() % 8;
             if (shape < 2) {
                 const int line = static_cast<int>(rng() % 3);
                 for (int i = 0; i < 3; ++i) m.set(shape == 0 ? line : i, shape == 0 ? i : line, F.zero());
             }
             std::ostringstream params;
             for (int r = 0; r < 3; ++r)
                 for (int c = 0; c < 3; ++c) params << (r || c ? " " : "") << m.at(r, c);
             const MasterSides s = master_sides(m, bu);
             return make_case(F, "master", params.str(), s.lhs, s.rhs, s.consistent());
         }},
        {"counting-lemma",
         [](const FiniteField& F, Rng& rng, const Budget& bu) {
             const Poly f = random_poly(F, rng, 2), g = random_poly(F, rng, 2), h = random_poly(F, rng, 2);
             const auto formula = static_cast<std::int64_t>(quadratic_in_y_count(f, g, h, bu));
             const auto direct = static_cast<std::int64_t>(direct_quadratic_count(f, g, h));
             return make_case(F, "counting-lemma",
                              "f=" + format_poly(f) + " g=" + format_poly(g) + " h=" + format_poly(h), formula, direct);
         }},
    };
    return r;
}

std::vector<SweepCase> run_field(const CaseFn& fn, const std::string& id, const FiniteField& F,
                                 const SweepConfig& cfg) {
    Rng rng = field_rng(cfg.seed, F.q());
    const std::uint64_t trials = id == "zhang" ? 1 : cfg.trials_per_field;
    std::vector<SweepCase> out;
    out.reserve(trials);
    constexpr int kMaxRedraws = 10000;
    for (std::uint64_t t = 0; t < trials; ++t) {
        for (int attempt = 0;; ++attempt) {
            try {
                out.push_back(fn(F, rng, cfg.budget));
                break;
            } catch (const Error& e) {
                if (!redraw(e) || attempt >= kMaxRedraws) throw;
            }
        }
    }
    return out;
}

void csv_field(std::ostream& os, const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        os << s;
        return;
    }
    os << '"';
    for (char c : s) os << (c == '"' ? "\"\"" : std::string(1, c));
    os << '"';
}

}  // namespace

PrimeRange parse_prime_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const std::uint64_t v = parse_u64(text, text);
        return {v, v};
    }
    return {parse_u64(text.substr(0, dots), text), parse_u64(text.substr(dots + 2), text)};
}

std::vector<std::uint64_t> primes_in(const PrimeRange& range) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = range.lo; n <= range.hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

void SweepConfig::validate() const {
    if (primes.lo < 5) throw Error(Errc::ConfigInvalid, "prime range must start at 5 or above");
    if (primes.hi < primes.lo) throw Error(Errc::ConfigInvalid, "empty prime range");
    if (trials_per_field < 1) throw Error(Errc::ConfigInvalid, "trials must be at least 1");
    if (extension_degrees.empty()) throw Error(Errc::ConfigInvalid, "no extension degrees");
    for (int k : extension_degrees)
        if (k < 1 || k > 3) throw Error(Errc::ConfigInvalid, "extension degree must be 1, 2 or 3");
    if (primes_in(primes).empty()) throw Error(Errc::ConfigInvalid, "no primes in range");
    for (const FiniteField& F : fields())
        if (F.q() > budget.max_q)
            throw Error(Errc::ConfigInvalid,
                        F.name() + " exceeds the brute-force budget " + std::to_string(budget.max_q));
}

std::vector<FiniteField> SweepConfig::fields() const {
    std::vector<FiniteField> out;
    for (std::uint64_t p : primes_in(primes))
        for (int k : extension_degrees) out.push_back(make_field(p, k));
    std::stable_sort(out.begin(), out.end(), [](const FiniteField& a, const FiniteField& b) { return a.q() < b.q(); });
    return out;
}

const std::vector<std::string>& known_identities() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

std::mt19937_64 field_rng(std::uint64_t seed, std::uint64_t q) { return Rng(seed ^ (q * 0x9E3779B97F4A7C15ull)); }

FieldElement random_element(const FiniteField& field, std::mt19937_64& rng) {
    return field.at_index(rng() % field.q());
}

SweepReport run_verify(const SweepConfig& config) {
    const auto it = registry().find(config.identity);
    if (it == registry().end()) throw Error(Errc::UnknownIdentity, "unknown identity '" + config.identity + "'");
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    const std::vector<FiniteField> fields = config.fields();
    std::vector<std::vector<SweepCase>> per_field(fields.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < fields.size(); i = next++) {
            try {
                per_field[i] = run_field(it->second, config.identity, fields[i], config);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, fields.size()));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    SweepReport report;
    for (auto& cases : per_field)
        for (auto& c : cases) {
            (c.pass ? report.passes : report.failures) += 1;
            report.cases.push_back(std::move(c));
        }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

void write_csv(const SweepReport& report, std::ostream& os) {
    os << "field_q,identity,params,lhs,rhs,pass\n";
    for (const SweepCase& c : report.cases) {
        os << c.field_q << ',' << c.identity << ',';
        csv_field(os, c.params);
        os << ',' << c.lhs << ',' << c.rhs << ',' << (c.pass ? "true" : "false") << '\n';
    }
}

void write_json(const SweepReport& report, std::ostream& os) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const SweepCase& c : report.cases) {
        out.push_back({{"field_q", c.field_q},
                       {"identity", c.identity},
                       {"params", c.params},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"pass", c.pass}});
    }
    os << out.dump(2) << '\n';
}

const std::vector<std::string>& known_examples() {
    static const std::vector<std::string> names = {"ex1", "ex2", "ex3", "jacobsthal-cubic", "rpr"};
    return names;
}

std::vector<TableRow> run_table(std::string_view example, const PrimeRange& primes, std::int64_t lambda,
                                const Budget& budget) {
    if (std::find(known_examples().begin(), known_examples().end(), example) == known_examples().end())
        throw Error(Errc::UnknownExample, "unknown example '" + std::string(example) + "'");
    if (primes.lo < 5 || primes.hi < primes.lo) throw Error(Errc::ConfigInvalid, "prime range must lie in [5, inf)");
    std::vector<TableRow> rows;
    for (std::uint64_t p : primes_in(primes)) {
        const FiniteField F = make_field(p);
        budget.check(F);
        std::int64_t closed = 0, brute = 0;
        bool extra = true;
        if (example == "ex1") {
            closed = example_1(p);
            brute = sigma_sum(example_1_poly(F), budget);
        } else if (example == "ex2") {
            closed = example_2(p);
            brute = sigma_sum(example_2_poly(F), budget);
        } else if (example == "ex3") {
            closed = -1 + F.legendre_minus_one() * sigma_sum(Poly::from_ints(F, {1, 1, 1, 0}), budget);
            brute = sigma_sum(Poly::from_ints(F, {1, 0, 1}) * Poly::from_ints(F, {1, 4, 1}), budget);
            extra = example_3(p, budget);
        } else if (example == "jacobsthal-cubic") {
            closed = jacobsthal_cubic(p);
            brute = sigma_sum(Poly::from_ints(F, {1, 0, 0, 1}), budget);
        } else {
            if (p == 19 || lambda % static_cast<std::int64_t>(p) == 0) continue;
            closed = rpr_cubic(p, lambda);
            brute = sigma_sum(rpr_poly(F, lambda), budget);
        }
        rows.push_back({p, closed, brute, extra && closed == brute});
    }
    return rows;
}

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& os) {
    os << "p,closed_form,brute_force,match\n";
    for (const TableRow& r : rows)
        os << r.p << ',' << r.closed_form << ',' << r.brute_force << ',' << (r.match ? "true" : "false") << '\n';
}

void write_table_json(const std::vector<TableRow>& rows, std::ostream& os) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const TableRow& r : rows)
        out.push_back({{"p", r.p}, {"closed_form", r.closed_form}, {"brute_force", r.brute_force}, {"match", r.match}});
    os << out.dump(2) << '\n';
}

}  // namespace qsum

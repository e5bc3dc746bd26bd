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

#ifndef QSUM_TESTS_ORACLE_HPP
#define QSUM_TESTS_ORACLE_HPP

// Plain-integer reference computations over prime fields.  Nothing here
// touches the library, so tests can compare the two routes.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 mod(i64 a, i64 p) { return ((a % p) + p) % p; }

inline i64 powmod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b = mod(b, p);
    while (e) {
        if (e & 1) r = static_cast<i64>(static_cast<__int128>(r) * b % p);
        b = static_cast<i64>(static_cast<__int128>(b) * b % p);
        e >>= 1;
    }
    return r;
}

/// Euler's criterion.
inline int legendre(i64 a, i64 p) {
    a = mod(a, p);
    if (a == 0) return 0;
    return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Coefficients leading first.
inline i64 eval(const std::vector<i64>& high_first, i64 x, i64 p) {
    i64 r = 0;
    for (i64 c : high_first) r = mod(r * x + c, p);
    return r;
}

inline i64 char_sum(const std::vector<i64>& high_first, i64 p) {
    i64 s = 0;
    for (i64 x = 0; x < p; ++x) s += legendre(eval(high_first, x, p), p);
    return s;
}

/// #{(x, y) : y^2 = f(x)} by double enumeration.
inline i64 points(const std::vector<i64>& high_first, i64 p) {
    i64 n = 0;
    for (i64 x = 0; x < p; ++x) {
        const i64 fx = eval(high_first, x, p);
        for (i64 y = 0; y < p; ++y) n += mod(y * y - fx, p) == 0;
    }
    return n;
}

inline i64 inverse(i64 a, i64 p) { return powmod(a, p - 2, p); }

/// Determinant mod p by Gaussian elimination.
inline i64 det(std::vector<std::vector<i64>> m, i64 p) {
    const std::size_t n = m.size();
    i64 d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && mod(m[piv][c], p) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = mod(-d, p);
        }
        const i64 inv = inverse(m[c][c], p);
        d = mod(d * mod(m[c][c], p), p);
        for (std::size_t r = c + 1; r < n; ++r) {
            const i64 f = mod(m[r][c] * inv, p);
            for (std::size_t k = c; k < n; ++k) m[r][k] = mod(m[r][k] - f * m[c][k], p);
        }
    }
    return d;
}

/// Discriminant of a polynomial of degree n >= 2 (leading coefficient a_n,
/// a unit mod p) from the Sylvester matrix of f and f':
///   disc = (-1)^{n(n-1)/2} det Syl(f, f') / a_n.
inline i64 discriminant(const std::vector<i64>& f, i64 p) {
    const std::size_t n = f.size() - 1;
    std::vector<i64> df;
    for (std::size_t i = 0; i < n; ++i) df.push_back(mod(f[i] * static_cast<i64>(n - i), p));
    const std::size_t size = 2 * n - 1;
    std::vector<std::vector<i64>> s(size, std::vector<i64>(size, 0));
    for (std::size_t r = 0; r < n - 1; ++r)
        for (std::size_t j = 0; j <= n; ++j) s[r][r + j] = mod(f[j], p);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) s[n - 1 + r][r + j] = df[j];
    i64 d = det(s, p);
    if ((n * (n - 1) / 2) % 2 == 1) d = mod(-d, p);
    return mod(d * inverse(f[0], p), p);
}

inline std::vector<i64> primes_between(i64 lo, i64 hi) {
    std::vector<i64> out;
    for (i64 n = std::max<i64>(lo, 2); n <= hi; ++n) {
        bool prime = true;
        for (i64 d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime = false;
                break;
            }
        if (prime) out.push_back(n);
    }
    return out;
}

}  // namespace oracle

#endif  // QSUM_TESTS_ORACLE_HPP

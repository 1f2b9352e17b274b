// Copyright 2026 The latgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LATGAME_RATIONAL_HPP
#define LATGAME_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latgame/errors.hpp"

namespace latgame {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt factorial(int k)
{
    BigInt r = 1;
    for (int i = 2; i <= k; ++i) {
        r *= i;
    }
    return r;
}

inline BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt pow2(int e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

/// Bell numbers B(0..n) via the recurrence over the Bell triangle.
inline std::vector<BigInt> bell_numbers(int n)
{
    std::vector<BigInt> bell{1};
    std::vector<BigInt> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& v : row) {
            next.push_back(next.back() + v);
        }
        row = std::move(next);
        bell.push_back(row.front());
    }
    return bell;
}

inline Rational make_rational(const BigInt& num, const BigInt& den)
{
    return Rational(num, den);
}

/// Renders "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& q)
{
    return q.str();
}

inline std::string to_string(const BigInt& z)
{
    return z.str();
}

/// Parses "p", "-p" or "p/q" with q != 0.
inline Rational parse_rational(std::string_view text)
{
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (c < '0' || c > '9') {
                return false;
            }
        }
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) {
            throw input_error("malformed rational '" + std::string(text) + "'");
        }
        return Rational(BigInt(strip_plus(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
        throw input_error("malformed rational '" + std::string(text) + "'");
    }
    BigInt d(strip_plus(den));
    if (d == 0) {
        throw input_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(BigInt(strip_plus(num)), d);
}

/// Approximate decimal rendering; only for human-facing CSV columns.
inline double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

}  // namespace latgame

#endif  // LATGAME_RATIONAL_HPP

#pragma once

// Helpers shared by the unit tests: a seeded generator of small series and
// a brute-force theta summation that does not touch the library's own code.

#include <cstdint>
#include <algorithm>
#include <map>
#include <random>

#include "series.hpp"

namespace testing_support {

using tmirror::Exponent;
using tmirror::LaurentSeries;
using tmirror::Rational;

inline LaurentSeries random_series(std::mt19937_64& rng, Exponent min_val, Exponent max_val, Exponent min_len,
                                   Exponent max_len)
{
    std::uniform_int_distribution<Exponent> val(min_val, max_val);
    std::uniform_int_distribution<Exponent> len(min_len, max_len);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    const Exponent v = val(rng);
    const Exponent n = len(rng);
    std::map<Exponent, Rational> terms;
    for (Exponent e = v; e < v + n; ++e) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        terms[e] = c;
    }
    // Nonzero leading coefficient so inverses exist.
    if (n > 0 && sgn(terms[v]) == 0) {
        terms[v] = 1;
    }
    return LaurentSeries::from_terms(terms, v + n);
}

// Direct sum of y^(72 N (n + p/q)^2) over every n that lands below T.
inline std::map<Exponent, long> brute_theta(long p, long q, long N, Exponent T)
{
    std::map<Exponent, long> out;
    for (long n = -200; n <= 200; ++n) {
        const long m = n * q + p;
        // 72 N m^2 / q^2 must be an integer for the families in use.
        const long numer = 72 * N * m * m;
        if (numer % (q * q) != 0) {
            continue;
        }
        const Exponent e = numer / (q * q);
        if (e < T) {
            out[e] += 1;
        }
    }
    return out;
}

inline bool matches(const LaurentSeries& s, const std::map<Exponent, long>& expected)
{
    for (Exponent e = 0; e < s.truncation(); ++e) {
        auto it = expected.find(e);
        const Rational want = it == expected.end() ? Rational(0) : Rational(it->second);
        if (s.coeff(e) != want) {
            return false;
        }
    }
    return true;
}

} // namespace testing_support

namespace testing_support {

// Equality on the window both sides know.
inline bool agree(const tmirror::LaurentSeries& a, const tmirror::LaurentSeries& b)
{
    return tmirror::eq_to_order(a, b, std::min(a.truncation(), b.truncation()));
}

} // namespace testing_support

#include "theta.hpp"

#include <cctype>
#include <numeric>

#include "errors.hpp"

namespace tmirror::theta {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Largest M >= 0 with c * M^2 < bound, or -1 when even M = 0 fails.
std::int64_t largest_below(std::int64_t c, Exponent bound)
{
    if (bound <= 0) {
        return -1;
    }
    std::int64_t m = 0;
    while (c * (m + 1) * (m + 1) < bound) {
        ++m;
    }
    return m;
}

} // namespace

std::int64_t period(Family f)
{
    switch (f) {
    case Family::A: return 6;
    case Family::B: return 18;
    case Family::C: return 24;
    case Family::D: return 72;
    }
    return 1;
}

char family_letter(Family f)
{
    switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    }
    return '?';
}

Family parse_family(char letter)
{
    switch (std::toupper(static_cast<unsigned char>(letter))) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    default: throw InvalidArgument(std::string("unknown theta family: ") + letter);
    }
}

FamilyIndex::FamilyIndex(Family f, std::int64_t k) : family(f), index(mod(k, period(f))) {}

ThetaChar characteristic(FamilyIndex f)
{
    const std::int64_t p = period(f.family);
    return ThetaChar{f.index, p, p};
}

LaurentSeries theta_series(const ThetaChar& ch, Exponent truncation)
{
    if (truncation < 0) {
        throw InvalidArgument("theta truncation must be nonnegative");
    }
    if (ch.a_den <= 0 || ch.scale <= 0) {
        throw InvalidArgument("theta characteristic needs positive denominator and scale");
    }
    // Reduce a = p/q; then gcd(q n + p, q) = 1 for every n, so the exponent
    // 72 N (q n + p)^2 / q^2 is integral for all n iff q^2 divides 72 N.
    const std::int64_t g = std::gcd(ch.a_num, ch.a_den);
    const std::int64_t p = ch.a_num / g;
    const std::int64_t q = ch.a_den / g;
    const std::int64_t weight = 72 * ch.scale;
    if (weight % (q * q) != 0) {
        throw DomainError("unsupported characteristic");
    }
    const std::int64_t c = weight / (q * q);

    // Summands are indexed by m = q n + p, m = p (mod q), exponent c m^2.
    std::map<Exponent, Rational> terms;
    const std::int64_t bound = largest_below(c, truncation);
    if (bound >= 0) {
        std::int64_t m = -bound + mod(p + bound, q);
        for (; m <= bound; m += q) {
            terms[c * m * m] += 1;
        }
    }
    return LaurentSeries::from_terms(terms, truncation);
}

LaurentSeries family_series(FamilyIndex f, Exponent truncation)
{
    return theta_series(characteristic(f), truncation);
}

LaurentSeries family_series(Family f, std::int64_t index, Exponent truncation)
{
    return family_series(FamilyIndex(f, index), truncation);
}

AdditionSides mumford_sides(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t k,
                            Exponent truncation)
{
    if (n <= 0 || k <= 0) {
        throw InvalidArgument("addition formula needs positive n and k");
    }
    AdditionSides out;
    out.lhs = theta_series({a, n, n}, truncation) * theta_series({b, n * k, n * k}, truncation);
    const std::int64_t big = k * (k + 1) * n;
    const std::int64_t mid = (k + 1) * n;
    for (std::int64_t eps = 0; eps <= k; ++eps) {
        out.rhs_terms.push_back(theta_series({b - k * a + k * n * eps, big, big}, truncation) *
                                theta_series({a + b + k * n * eps, mid, mid}, truncation));
    }
    return out;
}

bool mumford_identity_check(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t k,
                            Exponent truncation)
{
    const auto sides = mumford_sides(a, b, n, k, truncation);
    LaurentSeries rhs = LaurentSeries::zero(truncation);
    for (const auto& term : sides.rhs_terms) {
        rhs += term;
    }
    return eq_to_order(sides.lhs, rhs, truncation);
}

Decomposition ab_decomposition(std::int64_t a, std::int64_t b, Exponent truncation)
{
    Decomposition out;
    out.lhs = family_series(Family::A, a, truncation) * family_series(Family::B, b, truncation);
    out.rhs = LaurentSeries::zero(truncation);
    for (std::int64_t eps = 0; eps <= 3; ++eps) {
        out.rhs += family_series(Family::C, a + b + 18 * eps, truncation) *
                   family_series(Family::D, b - 3 * a + 18 * eps, truncation);
    }
    out.equal = eq_to_order(out.lhs, out.rhs, truncation);
    return out;
}

} // namespace tmirror::theta

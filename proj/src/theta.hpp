#pragma once

// Theta functions with characteristics, theta[a,0](N tau, 0), as series in y.
//
// The summand for n contributes exp(i pi N tau (n+a)^2) = y^(72 N (n+a)^2).

#include <cstdint>
#include <vector>

#include "series.hpp"

namespace tmirror::theta {

struct ThetaChar {
    std::int64_t a_num = 0;
    std::int64_t a_den = 1;
    std::int64_t scale = 1; // N
};

enum class Family { A, B, C, D };

// Index periods: A 6, B 18, C 24, D 72.
std::int64_t period(Family f);
char family_letter(Family f);
// Throws InvalidArgument for anything but A, B, C, D (case-insensitive).
Family parse_family(char letter);

struct FamilyIndex {
    Family family = Family::A;
    std::int64_t index = 0; // always in [0, period)

    FamilyIndex() = default;
    FamilyIndex(Family f, std::int64_t k);
};

// A_k = theta[k/6](6 tau), B_k = theta[k/18](18 tau), C_c = theta[c/24](24 tau),
// D_d = theta[d/72](72 tau).
ThetaChar characteristic(FamilyIndex f);

// Exact sum of all summands with exponent below truncation. Throws
// DomainError("unsupported characteristic") if the exponents are not
// integral in y, InvalidArgument if truncation < 0.
LaurentSeries theta_series(const ThetaChar& ch, Exponent truncation);

LaurentSeries family_series(FamilyIndex f, Exponent truncation);
LaurentSeries family_series(Family f, std::int64_t index, Exponent truncation);

// Both sides of the addition formula
//   theta[a/n](n tau) theta[b/(nk)](nk tau)
//     = sum_{eps=0..k} theta[(b-ka+kn eps)/(k(k+1)n)](k(k+1)n tau)
//                      theta[(a+b+kn eps)/((k+1)n)]((k+1)n tau).
struct AdditionSides {
    LaurentSeries lhs;
    std::vector<LaurentSeries> rhs_terms; // one per eps
};

AdditionSides mumford_sides(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t k,
                            Exponent truncation);

bool mumford_identity_check(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t k,
                            Exponent truncation);

// A_a B_b against sum_{eps=0..3} C_{a+b+18 eps} D_{b-3a+18 eps}.
struct Decomposition {
    LaurentSeries lhs;
    LaurentSeries rhs;
    bool equal = false;
};

Decomposition ab_decomposition(std::int64_t a, std::int64_t b, Exponent truncation);

} // namespace tmirror::theta

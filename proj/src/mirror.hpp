#pragma once

// The Hesse parameter z, the j-invariant it determines, and an independent
// j built from Eisenstein series, with an order-by-order comparison.

#include <cstdint>
#include <vector>

#include "relation.hpp"
#include "series.hpp"

namespace tmirror::mirror {

struct HesseParameter {
    LaurentSeries z;
};

struct JExpansion {
    LaurentSeries j;
};

// q = exp(2 pi i tau) = y^144.
inline constexpr Exponent kQ = 144;

// z = (2q + p) / (3u), from the closed forms.
HesseParameter hesse_z(const relation::ClosedForms& forms);
// Runs kernel_relation first, as z is only meaningful once it succeeds.
HesseParameter hesse_z(Exponent truncation);

// z = -(1/3) a9 (a0 a1 a2)^(-1/3). Requires a0 = a1 = a2 to known precision,
// so the cube root is a0 itself; throws CheckFailed otherwise.
HesseParameter hesse_z_from_relation(const relation::HesseRelation& rel);

// j = -27 z^3 (z^3 + 8)^3 (1 - z^3)^(-3).
JExpansion j_from_z(const HesseParameter& z);

// E4 = 1 + 240 sum sigma_3(n) q^n, E6 = 1 - 504 sum sigma_5(n) q^n,
// Delta = (E4^3 - E6^2)/1728, j = E4^3 / Delta; in y, known below truncation.
JExpansion j_reference(Exponent truncation);

// Brute-force divisor power sum.
mpz_class divisor_sigma(unsigned power, std::int64_t n);

struct CoefficientRow {
    Exponent exponent_x = 0;
    Rational from_relation;
    Rational reference;
    bool match = false;
};

struct MirrorReport {
    std::vector<CoefficientRow> coefficients;
    bool support_ok = false; // from_relation vanishes off multiples of y^144
    bool verdict = false;
};

// Compares the first n_terms coefficients q^-1, q^0, ... of two j-expansions.
// Throws PrecisionError naming the deepest certified term if either side is
// too short.
MirrorReport compare_expansions(const JExpansion& from_relation, const JExpansion& reference, int n_terms);

// Smallest y-truncation for which mirror_map_check certifies n_terms terms.
Exponent required_truncation(int n_terms);

MirrorReport mirror_map_check(Exponent truncation, int n_terms);

} // namespace tmirror::mirror

#pragma once

// The 9 x 10 matrix of cubic monomials in the Z basis, its kernel, and the
// resulting Hesse cubic a0 X0^3 + a1 X1^3 + a2 X2^3 + a9 X0 X1 X2 = 0.

#include <array>
#include <string>
#include <vector>

#include "fukaya.hpp"
#include "series_matrix.hpp"

namespace tmirror::relation {

// p = A0B0 + A3B9, q = A0B6 + A3B3, r = A0B2 + A3B7, s = A0B8 + A3B1,
// t = A0B4 + A3B5, u = A2B0 + A1B9, v = A2B6 + A1B3.
struct ClosedForms {
    LaurentSeries p, q, r, s, t, u, v;

    static ClosedForms from_table(const fukaya::ThetaTable& table);
    // Entry by symbol; '0' gives the zero series at `truncation`.
    LaurentSeries symbol(char name, Exponent truncation) const;
};

// Symbolic layout of the matrix: rows Z_0..Z_8, columns in cubic_basis() order.
const std::array<std::string, 9>& matrix_pattern();

struct StructureMatrix {
    SeriesMatrix m;
    ClosedForms forms;
    Exponent truncation = 0;
};

// Builds M from cubic_expand and checks every entry against the closed-form
// pattern. Throws CheckFailed("structure matrix inconsistent") on mismatch.
StructureMatrix structure_matrix(const fukaya::ThetaTable& table);
StructureMatrix structure_matrix(Exponent truncation);

// Ten coefficient series a_0..a_9, one per basis monomial.
struct HesseRelation {
    std::array<LaurentSeries, 10> coefficients;
};

// Every check made while extracting the kernel. kernel_relation throws when
// any of them fails; reports read the individual verdicts.
struct KernelAnalysis {
    std::array<LaurentSeries, 10> minors;    // (-1)^I det(M_I)
    std::array<LaurentSeries, 10> raw_form;  // ((p+q)u - 2qv, pv - qu, pv - qu, 0.., 2q^2 - pq - p^2)
    HesseRelation relation;                  // (u, u, u, 0, .., 0, -(p + 2q))
    std::vector<LaurentSeries> residual;     // M a

    bool middle_minors_vanish = false;       // columns 3..8
    bool u_equals_v = false;
    bool minors_proportional_to_raw = false;
    bool raw_equals_scaled_relation = false; // raw = (p - q) a
    bool factorization_holds = false;        // 2q^2 - pq - p^2 = -(p - q)(p + 2q)
    bool p_minus_q_nonzero = false;
    bool residual_vanishes = false;
    bool rank_certified = false;             // some 9x9 minor is nonzero

    bool ok() const;
};

KernelAnalysis analyze_kernel(const StructureMatrix& sm);

// Throws CheckFailed("kernel extraction failed: ...") if any check fails.
HesseRelation kernel_relation(const StructureMatrix& sm);
HesseRelation kernel_relation(Exponent truncation);

// True iff some signed minor has a nonzero leading coefficient within
// precision. Throws PrecisionError("precision exhausted") otherwise.
bool kernel_dimension_certificate(const SeriesMatrix& m);
bool kernel_dimension_certificate(Exponent truncation);

} // namespace tmirror::relation

#pragma once

// Structure constants of the ring sum_k Hom(S, L_k) in degrees up to three.
//
// Morphisms X_i in Hom(S, L_1), Y_i in Hom(S, L_2), Z_i in Hom(S, L_3), with
// i mod 3, 6, 9 respectively. The second factor of a product is moved to
// Hom(L_k, L_{k+l}) by rho^k; that identification is pure index bookkeeping.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "series.hpp"
#include "series_matrix.hpp"

namespace tmirror::fukaya {

enum class Level { X, Y, Z };

std::int64_t period(Level level); // 3, 6, 9
char level_letter(Level level);

struct MorphismIndex {
    Level level = Level::X;
    std::int64_t index = 0; // reduced mod period(level)

    MorphismIndex() = default;
    MorphismIndex(Level l, std::int64_t i);
    friend bool operator==(const MorphismIndex&, const MorphismIndex&) = default;
};

// A_0..A_5 and B_0..B_17 at a fixed truncation. Copyable, so tests can
// perturb an entry and rerun a check against the perturbed constants.
class ThetaTable {
public:
    explicit ThetaTable(Exponent truncation);

    Exponent truncation() const noexcept { return truncation_; }
    const LaurentSeries& A(std::int64_t k) const;
    const LaurentSeries& B(std::int64_t k) const;

    void set_A(std::int64_t k, LaurentSeries s);
    void set_B(std::int64_t k, LaurentSeries s);

private:
    Exponent truncation_;
    std::array<LaurentSeries, 6> a_;
    std::array<LaurentSeries, 18> b_;
};

struct ProductExpansion {
    Level target = Level::Y;
    std::map<std::int64_t, LaurentSeries> coefficients; // target index -> series
};

// X_i X_j = sum_{k=0,1} A_{i-j+3k} Y_{i+j+3k}
ProductExpansion product_xx(std::int64_t i, std::int64_t j, const ThetaTable& table);
ProductExpansion product_xx(std::int64_t i, std::int64_t j, Exponent truncation);

// Y_i X_j = sum_{k=0,1,2} B_{2j-i+6k} Z_{i+j+3k}
ProductExpansion product_yx(std::int64_t i, std::int64_t j, const ThetaTable& table);
ProductExpansion product_yx(std::int64_t i, std::int64_t j, Exponent truncation);

using XXRule = std::function<ProductExpansion(std::int64_t, std::int64_t, const ThetaTable&)>;

// Coefficient-wise equality of two expansions to the table truncation;
// an index missing on one side compares against zero.
bool same_expansion(const ProductExpansion& a, const ProductExpansion& b, Exponent order);

// X_i X_j == X_j X_i for all i, j mod 3.
bool commutativity_check_xx(const ThetaTable& table);
bool commutativity_check_xx(const ThetaTable& table, const XXRule& rule);
bool commutativity_check_xx(Exponent truncation);

using ZVector = std::array<LaurentSeries, 9>;

// (X_i X_j) X_k expanded in Z.
ZVector left_associated(std::int64_t i, std::int64_t j, std::int64_t k, const ThetaTable& table);
// X_i (X_j X_k) expanded in Z, using X_i Y_l = Y_l X_i.
ZVector right_associated(std::int64_t i, std::int64_t j, std::int64_t k, const ThetaTable& table);

bool same_z_vector(const ZVector& a, const ZVector& b, Exponent order);

bool associativity_check(std::int64_t i, std::int64_t j, std::int64_t k, const ThetaTable& table);
bool associativity_check(std::int64_t i, std::int64_t j, std::int64_t k, Exponent truncation);

// The ten cubic monomials in basis order
// {X0^3, X1^3, X2^3, X0^2X1, X1^2X2, X2^2X0, X0^2X2, X1^2X0, X2^2X1, X0X1X2}.
using Monomial = std::array<std::int64_t, 3>;
const std::array<Monomial, 10>& cubic_basis();
std::string monomial_name(const Monomial& m);

ZVector cubic_expand(const Monomial& monomial, const ThetaTable& table);

// 6 x 6 matrix of the degree-two monomials {X0^2, X1^2, X2^2, X0X1, X1X2, X2X0}
// in the basis Y_0..Y_5 (rows Y, columns monomials).
SeriesMatrix degree2_matrix(const ThetaTable& table);

struct Degree2Certificate {
    LaurentSeries determinant;
    LaurentSeries a0a1_minus_a2a3;
};

// Certifies that the degree-two monomials span Hom(S, L_2). Throws
// PrecisionError("precision exhausted") when either the determinant or
// A_0 A_1 - A_2 A_3 is zero to known precision.
Degree2Certificate degree2_certificate(const ThetaTable& table);
bool degree2_invertibility(Exponent truncation);

} // namespace tmirror::fukaya

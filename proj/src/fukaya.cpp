#include "fukaya.hpp"

#include "errors.hpp"
#include "theta.hpp"

namespace tmirror::fukaya {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

ZVector zero_z(Exponent truncation)
{
    ZVector z;
    z.fill(LaurentSeries::zero(truncation));
    return z;
}

// Adds c * (Y_l X_m) into z.
void accumulate_yx(ZVector& z, const LaurentSeries& c, std::int64_t l, std::int64_t m, const ThetaTable& table)
{
    for (const auto& [idx, coeff] : product_yx(l, m, table).coefficients) {
        z[static_cast<std::size_t>(idx)] += c * coeff;
    }
}

} // namespace

std::int64_t period(Level level)
{
    switch (level) {
    case Level::X: return 3;
    case Level::Y: return 6;
    case Level::Z: return 9;
    }
    return 1;
}

char level_letter(Level level)
{
    switch (level) {
    case Level::X: return 'X';
    case Level::Y: return 'Y';
    case Level::Z: return 'Z';
    }
    return '?';
}

MorphismIndex::MorphismIndex(Level l, std::int64_t i) : level(l), index(mod(i, period(l))) {}

ThetaTable::ThetaTable(Exponent truncation) : truncation_(truncation)
{
    for (std::int64_t k = 0; k < 6; ++k) {
        a_[static_cast<std::size_t>(k)] = theta::family_series(theta::Family::A, k, truncation);
    }
    for (std::int64_t k = 0; k < 18; ++k) {
        b_[static_cast<std::size_t>(k)] = theta::family_series(theta::Family::B, k, truncation);
    }
}

const LaurentSeries& ThetaTable::A(std::int64_t k) const
{
    return a_[static_cast<std::size_t>(mod(k, 6))];
}

const LaurentSeries& ThetaTable::B(std::int64_t k) const
{
    return b_[static_cast<std::size_t>(mod(k, 18))];
}

void ThetaTable::set_A(std::int64_t k, LaurentSeries s)
{
    a_[static_cast<std::size_t>(mod(k, 6))] = std::move(s);
}

void ThetaTable::set_B(std::int64_t k, LaurentSeries s)
{
    b_[static_cast<std::size_t>(mod(k, 18))] = std::move(s);
}

ProductExpansion product_xx(std::int64_t i, std::int64_t j, const ThetaTable& table)
{
    ProductExpansion out{Level::Y, {}};
    for (std::int64_t k = 0; k < 2; ++k) {
        out.coefficients.emplace(MorphismIndex(Level::Y, i + j + 3 * k).index, table.A(i - j + 3 * k));
    }
    return out;
}

ProductExpansion product_xx(std::int64_t i, std::int64_t j, Exponent truncation)
{
    return product_xx(i, j, ThetaTable(truncation));
}

ProductExpansion product_yx(std::int64_t i, std::int64_t j, const ThetaTable& table)
{
    ProductExpansion out{Level::Z, {}};
    for (std::int64_t k = 0; k < 3; ++k) {
        out.coefficients.emplace(MorphismIndex(Level::Z, i + j + 3 * k).index, table.B(2 * j - i + 6 * k));
    }
    return out;
}

ProductExpansion product_yx(std::int64_t i, std::int64_t j, Exponent truncation)
{
    return product_yx(i, j, ThetaTable(truncation));
}

bool same_expansion(const ProductExpansion& a, const ProductExpansion& b, Exponent order)
{
    if (a.target != b.target) {
        return false;
    }
    const auto zero = LaurentSeries::zero(order);
    for (std::int64_t idx = 0; idx < period(a.target); ++idx) {
        auto ia = a.coefficients.find(idx);
        auto ib = b.coefficients.find(idx);
        const LaurentSeries& sa = ia == a.coefficients.end() ? zero : ia->second;
        const LaurentSeries& sb = ib == b.coefficients.end() ? zero : ib->second;
        if (!eq_to_order(sa, sb, order)) {
            return false;
        }
    }
    return true;
}

bool commutativity_check_xx(const ThetaTable& table, const XXRule& rule)
{
    for (std::int64_t i = 0; i < 3; ++i) {
        for (std::int64_t j = 0; j < 3; ++j) {
            if (!same_expansion(rule(i, j, table), rule(j, i, table), table.truncation())) {
                return false;
            }
        }
    }
    return true;
}

bool commutativity_check_xx(const ThetaTable& table)
{
    return commutativity_check_xx(table, [](std::int64_t i, std::int64_t j, const ThetaTable& t) {
        return product_xx(i, j, t);
    });
}

bool commutativity_check_xx(Exponent truncation)
{
    return commutativity_check_xx(ThetaTable(truncation));
}

ZVector left_associated(std::int64_t i, std::int64_t j, std::int64_t k, const ThetaTable& table)
{
    ZVector z = zero_z(table.truncation());
    for (const auto& [l, c] : product_xx(i, j, table).coefficients) {
        accumulate_yx(z, c, l, k, table);
    }
    return z;
}

ZVector right_associated(std::int64_t i, std::int64_t j, std::int64_t k, const ThetaTable& table)
{
    ZVector z = zero_z(table.truncation());
    for (const auto& [l, c] : product_xx(j, k, table).coefficients) {
        accumulate_yx(z, c, l, i, table);
    }
    return z;
}

bool same_z_vector(const ZVector& a, const ZVector& b, Exponent order)
{
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (!eq_to_order(a[n], b[n], order)) {
            return false;
        }
    }
    return true;
}

bool associativity_check(std::int64_t i, std::int64_t j, std::int64_t k, const ThetaTable& table)
{
    return same_z_vector(left_associated(i, j, k, table), right_associated(i, j, k, table),
                         table.truncation());
}

bool associativity_check(std::int64_t i, std::int64_t j, std::int64_t k, Exponent truncation)
{
    return associativity_check(i, j, k, ThetaTable(truncation));
}

const std::array<Monomial, 10>& cubic_basis()
{
    static const std::array<Monomial, 10> basis{{
        {0, 0, 0}, {1, 1, 1}, {2, 2, 2},
        {0, 0, 1}, {1, 1, 2}, {2, 2, 0},
        {0, 0, 2}, {1, 1, 0}, {2, 2, 1},
        {0, 1, 2},
    }};
    return basis;
}

std::string monomial_name(const Monomial& m)
{
    std::string out;
    std::size_t n = 0;
    while (n < m.size()) {
        std::size_t run = 1;
        while (n + run < m.size() && m[n + run] == m[n]) {
            ++run;
        }
        out += "X" + std::to_string(m[n]);
        if (run > 1) {
            out += "^" + std::to_string(run);
        }
        n += run;
    }
    return out;
}

ZVector cubic_expand(const Monomial& monomial, const ThetaTable& table)
{
    return left_associated(monomial[0], monomial[1], monomial[2], table);
}

SeriesMatrix degree2_matrix(const ThetaTable& table)
{
    static const std::array<std::array<std::int64_t, 2>, 6> monomials{{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {2, 0}}};
    SeriesMatrix m(6, 6, table.truncation());
    for (std::size_t col = 0; col < monomials.size(); ++col) {
        for (const auto& [y, c] : product_xx(monomials[col][0], monomials[col][1], table).coefficients) {
            m(static_cast<std::size_t>(y), col) = c;
        }
    }
    return m;
}

Degree2Certificate degree2_certificate(const ThetaTable& table)
{
    Degree2Certificate out{determinant(degree2_matrix(table)),
                           table.A(0) * table.A(1) - table.A(2) * table.A(3)};
    if (out.determinant.is_zero() || out.a0a1_minus_a2a3.is_zero()) {
        throw PrecisionError("precision exhausted");
    }
    return out;
}

bool degree2_invertibility(Exponent truncation)
{
    degree2_certificate(ThetaTable(truncation));
    return true;
}

} // namespace tmirror::fukaya

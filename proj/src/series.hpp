#pragma once

// Truncated Laurent series with exact rational coefficients.
//
// A series is stored densely from its valuation up to (but excluding) its
// truncation. Every exponent below the truncation is exactly known: those
// below the valuation are zero, those inside the window are stored. The
// exponent unit is y = exp(i pi tau / 72); rebase_to_x() converts to the
// coarser x = y^4 for display.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tmirror {

using Rational = mpq_class;
using Exponent = std::int64_t;

// Builds num/den in lowest terms. Throws InvalidArgument on a zero denominator.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "n" or "n/d"; the result is canonicalized.
Rational parse_rational(std::string_view text);

// Always "num/den", with den > 0 (so 3 prints as "3/1").
std::string fraction_string(const Rational& value);

class LaurentSeries {
public:
    // The zero series with nothing known (truncation 0).
    LaurentSeries() = default;

    static LaurentSeries zero(Exponent truncation);
    static LaurentSeries one(Exponent truncation);
    static LaurentSeries monomial(const Rational& coeff, Exponent exponent, Exponent truncation);

    // coefficients[i] is the coefficient of y^(valuation + i); requires
    // valuation + coefficients.size() == truncation. Leading zeros are stripped.
    static LaurentSeries from_dense(Exponent valuation, std::vector<Rational> coefficients,
                                    Exponent truncation);

    // Terms at exponents >= truncation are dropped.
    static LaurentSeries from_terms(const std::map<Exponent, Rational>& terms, Exponent truncation);

    Exponent valuation() const noexcept { return valuation_; }
    Exponent truncation() const noexcept { return valuation_ + static_cast<Exponent>(coeffs_.size()); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    // True when every known coefficient is zero.
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Leading (valuation) coefficient. Throws PrecisionError on a zero series.
    const Rational& leading() const;

    // Coefficient of y^e. Exponents below the valuation read as zero; e >=
    // truncation throws PrecisionError("exponent outside precision").
    Rational coeff(Exponent e) const;

    // Nonzero terms in increasing exponent order.
    std::vector<std::pair<Exponent, Rational>> terms() const;

    // Same values, lower precision. new_truncation above the current one is clamped.
    LaurentSeries truncated(Exponent new_truncation) const;

    // Exact structural equality: same window and same coefficients.
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& rhs);
    LaurentSeries& operator-=(const LaurentSeries& rhs);
    LaurentSeries& operator*=(const LaurentSeries& rhs);

private:
    LaurentSeries(Exponent valuation, std::vector<Rational> coeffs);
    void canonicalize();

    Exponent valuation_ = 0;
    std::vector<Rational> coeffs_;
};

// Sum; truncation is the smaller of the two.
LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);

// Cauchy product; truncation is
// min(a.truncation + b.valuation, b.truncation + a.valuation).
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries scale(const LaurentSeries& a, const Rational& c);

// Multiplicative inverse with valuation -v and truncation a.truncation - 2v.
// Throws PrecisionError("zero leading coefficient") when a is zero to its
// known precision.
LaurentSeries inverse(const LaurentSeries& a);

LaurentSeries pow(const LaurentSeries& a, unsigned n);

// Substitutes y -> y^factor (factor >= 1). Exponents that are not multiples
// of factor are structurally zero, so the truncation scales as well.
LaurentSeries stretch(const LaurentSeries& a, Exponent factor);

// Compares every exponent below order. Both truncations must reach order.
bool eq_to_order(const LaurentSeries& a, const LaurentSeries& b, Exponent order);

// A series whose exponent unit is x = y^4.
struct XSeries {
    LaurentSeries series;
};

// Throws DomainError("series not expressible in x") if a nonzero known
// coefficient sits at an exponent not divisible by 4. Truncation becomes
// floor(truncation / 4).
XSeries rebase_to_x(const LaurentSeries& a);

bool expressible_in_x(const LaurentSeries& a);

// Human readable form, e.g. "x^3 + x^75 + O(x^200)".
std::string to_string(const LaurentSeries& a, std::string_view variable = "y");
std::string to_string(const XSeries& a);

} // namespace tmirror

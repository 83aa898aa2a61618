#include "series.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace tmirror {

namespace {

Exponent floor_div(Exponent a, Exponent b)
{
    Exponent q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::vector<std::size_t> nonzero_positions(std::span<const Rational> coeffs)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (sgn(coeffs[i]) != 0) {
            out.push_back(i);
        }
    }
    return out;
}

} // namespace

Rational make_rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw InvalidArgument("zero denominator");
    }
    Rational r{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) {
        throw InvalidArgument("empty rational");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw InvalidArgument("malformed rational: " + s);
    }
    if (sgn(r.get_den()) == 0) {
        throw InvalidArgument("zero denominator: " + s);
    }
    r.canonicalize();
    return r;
}

std::string fraction_string(const Rational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

LaurentSeries::LaurentSeries(Exponent valuation, std::vector<Rational> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs))
{
    canonicalize();
}

void LaurentSeries::canonicalize()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) != 0; });
    auto skip = first - coeffs_.begin();
    if (skip > 0) {
        valuation_ += skip;
        coeffs_.erase(coeffs_.begin(), first);
    }
}

LaurentSeries LaurentSeries::zero(Exponent truncation)
{
    return LaurentSeries(truncation, {});
}

LaurentSeries LaurentSeries::one(Exponent truncation)
{
    return monomial(Rational(1), 0, truncation);
}

LaurentSeries LaurentSeries::monomial(const Rational& coeff, Exponent exponent, Exponent truncation)
{
    if (exponent >= truncation || sgn(coeff) == 0) {
        return zero(truncation);
    }
    std::vector<Rational> c(static_cast<std::size_t>(truncation - exponent));
    c[0] = coeff;
    return LaurentSeries(exponent, std::move(c));
}

LaurentSeries LaurentSeries::from_dense(Exponent valuation, std::vector<Rational> coefficients,
                                        Exponent truncation)
{
    if (valuation + static_cast<Exponent>(coefficients.size()) != truncation) {
        throw InvalidArgument("coefficient count does not match the precision window");
    }
    return LaurentSeries(valuation, std::move(coefficients));
}

LaurentSeries LaurentSeries::from_terms(const std::map<Exponent, Rational>& terms, Exponent truncation)
{
    auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& kv) {
        return kv.first < truncation && sgn(kv.second) != 0;
    });
    if (it == terms.end() || it->first >= truncation) {
        return zero(truncation);
    }
    const Exponent lo = it->first;
    std::vector<Rational> c(static_cast<std::size_t>(truncation - lo));
    for (; it != terms.end() && it->first < truncation; ++it) {
        c[static_cast<std::size_t>(it->first - lo)] += it->second;
    }
    return LaurentSeries(lo, std::move(c));
}

const Rational& LaurentSeries::leading() const
{
    if (coeffs_.empty()) {
        throw PrecisionError("zero leading coefficient");
    }
    return coeffs_.front();
}

Rational LaurentSeries::coeff(Exponent e) const
{
    if (e >= truncation()) {
        throw PrecisionError("exponent outside precision: y^" + std::to_string(e) +
                             " with truncation " + std::to_string(truncation()));
    }
    if (e < valuation_) {
        return Rational(0);
    }
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

std::vector<std::pair<Exponent, Rational>> LaurentSeries::terms() const
{
    std::vector<std::pair<Exponent, Rational>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) {
            out.emplace_back(valuation_ + static_cast<Exponent>(i), coeffs_[i]);
        }
    }
    return out;
}

LaurentSeries LaurentSeries::truncated(Exponent new_truncation) const
{
    if (new_truncation >= truncation()) {
        return *this;
    }
    if (new_truncation <= valuation_) {
        return zero(new_truncation);
    }
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (new_truncation - valuation_));
    return LaurentSeries(valuation_, std::move(c));
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& rhs)
{
    const Exponent trunc = std::min(truncation(), rhs.truncation());
    const Exponent lo = std::min(std::min(valuation_, rhs.valuation_), trunc);
    std::vector<Rational> c(static_cast<std::size_t>(trunc - lo));
    for (Exponent e = std::max(valuation_, lo); e < trunc; ++e) {
        c[static_cast<std::size_t>(e - lo)] = coeffs_[static_cast<std::size_t>(e - valuation_)];
    }
    for (Exponent e = std::max(rhs.valuation_, lo); e < trunc; ++e) {
        c[static_cast<std::size_t>(e - lo)] += rhs.coeffs_[static_cast<std::size_t>(e - rhs.valuation_)];
    }
    *this = LaurentSeries(lo, std::move(c));
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& rhs)
{
    return *this += -rhs;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& rhs)
{
    *this = *this * rhs;
    return *this;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
{
    LaurentSeries out = a;
    out += b;
    return out;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b)
{
    LaurentSeries out = a;
    out -= b;
    return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    const Exponent trunc = std::min(a.truncation() + b.valuation(), b.truncation() + a.valuation());
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries::zero(trunc);
    }
    const Exponent val = a.valuation() + b.valuation();
    const auto len = static_cast<std::size_t>(trunc - val);
    std::vector<Rational> c(len);
    const auto ca = a.coefficients();
    const auto cb = b.coefficients();
    const auto nb = nonzero_positions(cb);
    Rational tmp;
    for (std::size_t i = 0; i < ca.size() && i < len; ++i) {
        if (sgn(ca[i]) == 0) {
            continue;
        }
        for (std::size_t j : nb) {
            if (i + j >= len) {
                break;
            }
            mpq_mul(tmp.get_mpq_t(), ca[i].get_mpq_t(), cb[j].get_mpq_t());
            c[i + j] += tmp;
        }
    }
    return LaurentSeries::from_dense(val, std::move(c), trunc);
}

LaurentSeries scale(const LaurentSeries& a, const Rational& c)
{
    if (sgn(c) == 0) {
        return LaurentSeries::zero(a.truncation());
    }
    std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
    for (auto& x : out) {
        x *= c;
    }
    return LaurentSeries::from_dense(a.valuation(), std::move(out), a.truncation());
}

LaurentSeries inverse(const LaurentSeries& a)
{
    const Rational& lead = a.leading();
    const Exponent v = a.valuation();
    const auto ca = a.coefficients();
    const std::size_t len = ca.size();
    const Rational lead_inv = 1 / lead;

    std::vector<std::size_t> na;
    for (std::size_t i = 1; i < len; ++i) {
        if (sgn(ca[i]) != 0) {
            na.push_back(i);
        }
    }

    std::vector<Rational> b(len);
    b[0] = lead_inv;
    Rational acc;
    Rational tmp;
    for (std::size_t k = 1; k < len; ++k) {
        acc = 0;
        for (std::size_t i : na) {
            if (i > k) {
                break;
            }
            if (sgn(b[k - i]) != 0) {
                mpq_mul(tmp.get_mpq_t(), ca[i].get_mpq_t(), b[k - i].get_mpq_t());
                acc += tmp;
            }
        }
        b[k] = -acc * lead_inv;
    }
    return LaurentSeries::from_dense(-v, std::move(b), a.truncation() - 2 * v);
}

LaurentSeries pow(const LaurentSeries& a, unsigned n)
{
    if (n == 0) {
        return LaurentSeries::one(a.truncation() - a.valuation());
    }
    LaurentSeries result = a;
    for (unsigned i = 1; i < n; ++i) {
        result = result * a;
    }
    return result;
}

LaurentSeries stretch(const LaurentSeries& a, Exponent factor)
{
    if (factor < 1) {
        throw InvalidArgument("stretch factor must be positive");
    }
    std::map<Exponent, Rational> terms;
    for (auto& [e, c] : a.terms()) {
        terms.emplace(e * factor, c);
    }
    return LaurentSeries::from_terms(terms, a.truncation() * factor);
}

bool eq_to_order(const LaurentSeries& a, const LaurentSeries& b, Exponent order)
{
    if (a.truncation() < order || b.truncation() < order) {
        throw PrecisionError("comparison to y^" + std::to_string(order) +
                             " exceeds known precision (truncations " + std::to_string(a.truncation()) +
                             ", " + std::to_string(b.truncation()) + ")");
    }
    const Exponent lo = std::min(a.valuation(), b.valuation());
    for (Exponent e = lo; e < order; ++e) {
        if (a.coeff(e) != b.coeff(e)) {
            return false;
        }
    }
    return true;
}

bool expressible_in_x(const LaurentSeries& a)
{
    for (auto& [e, c] : a.terms()) {
        if (e % 4 != 0) {
            return false;
        }
    }
    return true;
}

XSeries rebase_to_x(const LaurentSeries& a)
{
    if (!expressible_in_x(a)) {
        throw DomainError("series not expressible in x");
    }
    std::map<Exponent, Rational> terms;
    for (auto& [e, c] : a.terms()) {
        terms.emplace(e / 4, c);
    }
    return XSeries{LaurentSeries::from_terms(terms, floor_div(a.truncation(), 4))};
}

std::string to_string(const LaurentSeries& a, std::string_view variable)
{
    std::ostringstream out;
    bool first = true;
    for (auto& [e, c] : a.terms()) {
        const bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (!unit || e == 0) {
            out << mag.get_str();
        }
        if (e != 0) {
            out << variable;
            if (e != 1) {
                out << "^" << e;
            }
        }
    }
    if (first) {
        out << "0";
    }
    out << " + O(" << variable << "^" << a.truncation() << ")";
    return out.str();
}

std::string to_string(const XSeries& a)
{
    return to_string(a.series, "x");
}

} // namespace tmirror

#include "mirror.hpp"

#include <algorithm>

#include "errors.hpp"

namespace tmirror::mirror {

namespace {

Exponent ceil_div(Exponent a, Exponent b)
{
    Exponent q = a / b;
    if (a % b != 0 && ((a > 0) == (b > 0))) {
        ++q;
    }
    return q;
}

// 1 + weight * sum_{n >= 1} sigma_power(n) q^n, known below truncation.
LaurentSeries eisenstein(unsigned power, long weight, Exponent truncation)
{
    std::map<Exponent, Rational> terms{{0, Rational(1)}};
    for (Exponent n = 1; n < truncation; ++n) {
        terms[n] = Rational(divisor_sigma(power, n) * weight);
    }
    return LaurentSeries::from_terms(terms, truncation);
}

} // namespace

HesseParameter hesse_z(const relation::ClosedForms& forms)
{
    const LaurentSeries numerator = scale(forms.q, Rational(2)) + forms.p;
    return {numerator * inverse(scale(forms.u, Rational(3)))};
}

HesseParameter hesse_z(Exponent truncation)
{
    const auto sm = relation::structure_matrix(truncation);
    relation::kernel_relation(sm);
    return hesse_z(sm.forms);
}

HesseParameter hesse_z_from_relation(const relation::HesseRelation& rel)
{
    const auto& a = rel.coefficients;
    const Exponent order = std::min({a[0].truncation(), a[1].truncation(), a[2].truncation()});
    if (!eq_to_order(a[0], a[1], order) || !eq_to_order(a[0], a[2], order)) {
        throw CheckFailed("relation is not of Hesse form: a0, a1, a2 differ");
    }
    return {scale(a[9] * inverse(a[0]), make_rational(-1, 3))};
}

JExpansion j_from_z(const HesseParameter& hp)
{
    const LaurentSeries z3 = pow(hp.z, 3);
    const LaurentSeries shifted = z3 + LaurentSeries::monomial(Rational(8), 0, z3.truncation());
    const LaurentSeries denom = LaurentSeries::one(z3.truncation()) - z3;
    const LaurentSeries numerator = scale(z3, Rational(-27)) * pow(shifted, 3);
    return {numerator * pow(inverse(denom), 3)};
}

mpz_class divisor_sigma(unsigned power, std::int64_t n)
{
    mpz_class total = 0;
    for (std::int64_t d = 1; d <= n; ++d) {
        if (n % d == 0) {
            mpz_class term;
            mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), power);
            total += term;
        }
    }
    return total;
}

JExpansion j_reference(Exponent truncation)
{
    const Exponent known_q = std::max<Exponent>(ceil_div(truncation, kQ), 0);
    const Exponent work = known_q + 2;
    const LaurentSeries e4 = eisenstein(3, 240, work);
    const LaurentSeries e6 = eisenstein(5, -504, work);
    const LaurentSeries e4_cubed = pow(e4, 3);
    const LaurentSeries delta = scale(e4_cubed - pow(e6, 2), make_rational(1, 1728));
    const LaurentSeries j_q = e4_cubed * inverse(delta);
    return {stretch(j_q, kQ).truncated(truncation)};
}

Exponent required_truncation(int n_terms)
{
    // z loses 96 (u has valuation 48) and j loses another 96 to the
    // negative-valuation powers; the last term sits at y^(144 (n - 2)).
    return kQ * (n_terms - 2) + 1 + 192;
}

MirrorReport compare_expansions(const JExpansion& from_relation, const JExpansion& reference, int n_terms)
{
    if (n_terms < 1) {
        throw InvalidArgument("n_terms must be positive");
    }
    const Exponent known = std::min(from_relation.j.truncation(), reference.j.truncation());
    const Exponent last = -kQ + kQ * (n_terms - 1);
    if (last >= known) {
        const Exponent certified = known <= -kQ ? 0 : ceil_div(known + kQ, kQ);
        std::string msg = "precision exhausted: " + std::to_string(n_terms) + " terms requested, ";
        if (certified == 0) {
            msg += "no term certified";
        } else {
            msg += "certified through x^" + std::to_string((-kQ + kQ * (certified - 1)) / 4) + " (" +
                   std::to_string(certified) + " terms)";
        }
        throw PrecisionError(msg);
    }

    MirrorReport out;
    out.verdict = true;
    for (int t = 0; t < n_terms; ++t) {
        const Exponent e = -kQ + kQ * t;
        CoefficientRow row{e / 4, from_relation.j.coeff(e), reference.j.coeff(e), false};
        row.match = (row.from_relation == row.reference);
        out.verdict = out.verdict && row.match;
        out.coefficients.push_back(std::move(row));
    }
    out.support_ok = true;
    for (const auto& [e, c] : from_relation.j.terms()) {
        if (e % kQ != 0) {
            out.support_ok = false;
        }
    }
    out.verdict = out.verdict && out.support_ok;
    return out;
}

MirrorReport mirror_map_check(Exponent truncation, int n_terms)
{
    const JExpansion j = j_from_z(hesse_z(truncation));
    return compare_expansions(j, j_reference(j.j.truncation()), n_terms);
}

} // namespace tmirror::mirror

#include "relation.hpp"

#include <algorithm>

#include "errors.hpp"

namespace tmirror::relation {

namespace {

bool agree(const LaurentSeries& a, const LaurentSeries& b)
{
    return eq_to_order(a, b, std::min(a.truncation(), b.truncation()));
}

} // namespace

ClosedForms ClosedForms::from_table(const fukaya::ThetaTable& t)
{
    return ClosedForms{
        t.A(0) * t.B(0) + t.A(3) * t.B(9),
        t.A(0) * t.B(6) + t.A(3) * t.B(3),
        t.A(0) * t.B(2) + t.A(3) * t.B(7),
        t.A(0) * t.B(8) + t.A(3) * t.B(1),
        t.A(0) * t.B(4) + t.A(3) * t.B(5),
        t.A(2) * t.B(0) + t.A(1) * t.B(9),
        t.A(2) * t.B(6) + t.A(1) * t.B(3),
    };
}

LaurentSeries ClosedForms::symbol(char name, Exponent truncation) const
{
    switch (name) {
    case 'p': return p;
    case 'q': return q;
    case 'r': return r;
    case 's': return s;
    case 't': return t;
    case 'u': return u;
    case 'v': return v;
    case '0': return LaurentSeries::zero(truncation);
    default: throw InvalidArgument(std::string("unknown matrix symbol: ") + name);
    }
}

const std::array<std::string, 9>& matrix_pattern()
{
    static const std::array<std::string, 9> rows{
        "pqq000000u",
        "000rts0000",
        "000000trs0",
        "qpq000000v",
        "000srt0000",
        "000000str0",
        "qqp000000v",
        "000tsr0000",
        "000000rst0",
    };
    return rows;
}

StructureMatrix structure_matrix(const fukaya::ThetaTable& table)
{
    const Exponent T = table.truncation();
    StructureMatrix out{SeriesMatrix(9, 10, T), ClosedForms::from_table(table), T};
    const auto& basis = fukaya::cubic_basis();
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto z = fukaya::cubic_expand(basis[col], table);
        for (std::size_t row = 0; row < 9; ++row) {
            out.m(row, col) = z[row];
            const char sym = matrix_pattern()[row][col];
            if (!eq_to_order(z[row], out.forms.symbol(sym, T), T)) {
                throw CheckFailed("structure matrix inconsistent: entry (Z_" + std::to_string(row) + ", " +
                                  fukaya::monomial_name(basis[col]) + ") differs from " + sym);
            }
        }
    }
    return out;
}

StructureMatrix structure_matrix(Exponent truncation)
{
    return structure_matrix(fukaya::ThetaTable(truncation));
}

bool KernelAnalysis::ok() const
{
    return middle_minors_vanish && u_equals_v && minors_proportional_to_raw && raw_equals_scaled_relation &&
           factorization_holds && p_minus_q_nonzero && residual_vanishes && rank_certified;
}

KernelAnalysis analyze_kernel(const StructureMatrix& sm)
{
    const auto& f = sm.forms;
    const Exponent T = sm.truncation;
    KernelAnalysis out;

    for (std::size_t col = 0; col < 10; ++col) {
        out.minors[col] = signed_minor(sm.m, col);
    }
    out.middle_minors_vanish = std::all_of(out.minors.begin() + 3, out.minors.begin() + 9,
                                           [](const LaurentSeries& s) { return s.is_zero(); });
    out.rank_certified = std::any_of(out.minors.begin(), out.minors.end(),
                                     [](const LaurentSeries& s) { return !s.is_zero(); });

    out.u_equals_v = eq_to_order(f.u, f.v, T);

    const LaurentSeries zero = LaurentSeries::zero(T);
    const LaurentSeries pv_qu = f.p * f.v - f.q * f.u;
    out.raw_form = {(f.p + f.q) * f.u - scale(f.q * f.v, Rational(2)),
                    pv_qu,
                    pv_qu,
                    zero, zero, zero, zero, zero, zero,
                    scale(f.q * f.q, Rational(2)) - f.p * f.q - f.p * f.p};

    const LaurentSeries a9 = -(f.p + scale(f.q, Rational(2)));
    out.relation.coefficients = {f.u, f.u, f.u, zero, zero, zero, zero, zero, zero, a9};

    const LaurentSeries p_minus_q = f.p - f.q;
    out.p_minus_q_nonzero = !p_minus_q.is_zero();
    out.factorization_holds = agree(out.raw_form[9], p_minus_q * a9);

    out.raw_equals_scaled_relation = true;
    for (std::size_t i = 0; i < 10; ++i) {
        if (!agree(out.raw_form[i], p_minus_q * out.relation.coefficients[i])) {
            out.raw_equals_scaled_relation = false;
        }
    }

    // minors[I] raw[J] == minors[J] raw[I] for every pair.
    out.minors_proportional_to_raw = out.rank_certified;
    for (std::size_t i = 0; i < 10 && out.minors_proportional_to_raw; ++i) {
        for (std::size_t j = i + 1; j < 10; ++j) {
            if (!agree(out.minors[i] * out.raw_form[j], out.minors[j] * out.raw_form[i])) {
                out.minors_proportional_to_raw = false;
                break;
            }
        }
    }

    out.residual = multiply(sm.m, std::vector<LaurentSeries>(out.relation.coefficients.begin(),
                                                             out.relation.coefficients.end()));
    out.residual_vanishes = std::all_of(out.residual.begin(), out.residual.end(),
                                        [](const LaurentSeries& s) { return s.is_zero(); });
    return out;
}

HesseRelation kernel_relation(const StructureMatrix& sm)
{
    KernelAnalysis k = analyze_kernel(sm);
    if (!k.ok()) {
        std::string why;
        const auto note = [&](bool good, const char* what) {
            if (!good) {
                why += why.empty() ? what : std::string(", ") + what;
            }
        };
        note(k.u_equals_v, "u != v");
        note(k.middle_minors_vanish, "minors 3..8 nonzero");
        note(k.minors_proportional_to_raw, "minors not proportional to raw form");
        note(k.raw_equals_scaled_relation, "raw form != (p-q) a");
        note(k.factorization_holds, "factorization failed");
        note(k.p_minus_q_nonzero, "p - q vanishes");
        note(k.residual_vanishes, "M a != 0");
        note(k.rank_certified, "rank not certified");
        throw CheckFailed("kernel extraction failed: " + why);
    }
    return k.relation;
}

HesseRelation kernel_relation(Exponent truncation)
{
    return kernel_relation(structure_matrix(truncation));
}

bool kernel_dimension_certificate(const SeriesMatrix& m)
{
    for (std::size_t col = 0; col < m.cols(); ++col) {
        if (!signed_minor(m, col).is_zero()) {
            return true;
        }
    }
    throw PrecisionError("precision exhausted: every 9x9 minor vanishes to known precision");
}

bool kernel_dimension_certificate(Exponent truncation)
{
    return kernel_dimension_certificate(structure_matrix(truncation).m);
}

} // namespace tmirror::relation

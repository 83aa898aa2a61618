#include "oracle_check.hpp"

#include "fukaya.hpp"

namespace tmirror::torus {

namespace {

struct Geometry {
    Rational base_step; // base point x = index * base_step
    Rational s1;
    Rational s2;
    Rational mid_step;  // middle vertex x = index * mid_step
    Rational end_step;
    std::int64_t bases;
    std::int64_t mids;
};

Geometry geometry(Configuration c)
{
    switch (c) {
    case Configuration::XX:
        return {make_rational(1, 3), Rational(3), Rational(6), make_rational(1, 3), make_rational(1, 6), 3, 3};
    case Configuration::YX:
        return {make_rational(1, 6), Rational(6), Rational(9), make_rational(1, 3), make_rational(1, 9), 6, 3};
    case Configuration::XY:
        return {make_rational(1, 3), Rational(3), Rational(9), make_rational(1, 6), make_rational(1, 9), 3, 6};
    }
    return {};
}

// Coefficient expansion predicted by the closed-form products for the
// triangle with base index `base` and middle index `mid`.
fukaya::ProductExpansion expected(Configuration c, std::int64_t base, std::int64_t mid,
                                  const fukaya::ThetaTable& table)
{
    switch (c) {
    case Configuration::XX: return fukaya::product_xx(base, mid, table);
    case Configuration::YX: return fukaya::product_yx(base, mid, table);
    case Configuration::XY: return fukaya::product_yx(mid, base, table);
    }
    return {};
}

std::string describe(const BinKey& key)
{
    return "(" + key.first.get_str() + ", " + key.second.get_str() + ")";
}

} // namespace

std::string configuration_name(Configuration c)
{
    switch (c) {
    case Configuration::XX: return "X*X";
    case Configuration::YX: return "Y*X";
    case Configuration::XY: return "X*Y";
    }
    return "?";
}

std::vector<OracleComparison> oracle_comparisons(Exponent truncation, OracleOptions options)
{
    const fukaya::ThetaTable table(truncation);
    std::vector<OracleComparison> out;
    for (Configuration c : {Configuration::XX, Configuration::YX, Configuration::XY}) {
        const Geometry g = geometry(c);
        for (std::int64_t base = 0; base < g.bases; ++base) {
            OracleComparison cmp{c, base, true, {}};
            OracleBins bins = triangle_oracle(Rational(base) * g.base_step, g.s1, g.s2, truncation, options);

            OracleBins predicted;
            for (std::int64_t mid = 0; mid < g.mids; ++mid) {
                for (const auto& [target, series] : expected(c, base, mid, table).coefficients) {
                    predicted.emplace(BinKey{mod1(Rational(mid) * g.mid_step), mod1(Rational(target) * g.end_step)},
                                      series);
                }
            }

            const auto zero = LaurentSeries::zero(truncation);
            const auto check = [&](const BinKey& key) {
                auto ib = bins.find(key);
                auto ip = predicted.find(key);
                const LaurentSeries& got = ib == bins.end() ? zero : ib->second;
                const LaurentSeries& want = ip == predicted.end() ? zero : ip->second;
                if (cmp.match && !eq_to_order(got, want, truncation)) {
                    cmp.match = false;
                    cmp.detail = "bin " + describe(key) + ": triangles give " + to_string(got) +
                                 ", products give " + to_string(want);
                }
            };
            for (const auto& kv : bins) {
                check(kv.first);
            }
            for (const auto& kv : predicted) {
                check(kv.first);
            }
            out.push_back(std::move(cmp));
        }
    }
    return out;
}

bool oracle_vs_theta(Exponent truncation, OracleOptions options)
{
    for (const auto& cmp : oracle_comparisons(truncation, options)) {
        if (!cmp.match) {
            return false;
        }
    }
    return true;
}

} // namespace tmirror::torus

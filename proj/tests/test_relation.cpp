#include <doctest.h>

#include "errors.hpp"
#include "relation.hpp"
#include "support.hpp"

using namespace tmirror;
using namespace tmirror::relation;
using testing_support::agree;

namespace {

const StructureMatrix& shared_matrix()
{
    static const StructureMatrix sm = structure_matrix(800);
    return sm;
}

SeriesMatrix nine_by_ten_identity(Exponent T)
{
    // Zero first column, identity in the remaining nine.
    SeriesMatrix m(9, 10, T);
    for (std::size_t i = 0; i < 9; ++i) {
        m(i, i + 1) = LaurentSeries::one(T);
    }
    return m;
}

} // namespace

TEST_SUITE("relation") {

TEST_CASE("structure matrix entries match the closed forms")
{
    const auto& sm = shared_matrix();
    CHECK(sm.m.rows() == 9);
    CHECK(sm.m.cols() == 10);
    CHECK(sm.m(0, 0) == sm.forms.p);
    CHECK(sm.m(4, 4) == sm.forms.r);
    CHECK(sm.m(1, 0).is_zero());
    const auto& pattern = matrix_pattern();
    for (std::size_t r = 0; r < 9; ++r) {
        for (std::size_t c = 0; c < 10; ++c) {
            const char sym = pattern[r][c];
            if (sym == '0') {
                CHECK(sm.m(r, c).is_zero());
            } else {
                CHECK(agree(sm.m(r, c), sm.forms.symbol(sym, sm.truncation)));
                CHECK(sm.m(r, c).valuation() >= 0);
            }
        }
    }
}

TEST_CASE("u equals v and p - q leads with 1")
{
    const auto& f = shared_matrix().forms;
    CHECK(agree(f.u, f.v));
    auto d = f.p - f.q;
    CHECK(d.valuation() == 0);
    CHECK(d.leading() == 1);
    CHECK(f.p.leading() == 1);
    CHECK(f.p.valuation() == 0);
    CHECK(f.q.valuation() == 144);
    CHECK(f.u.valuation() == 48);
}

TEST_CASE("signed minors")
{
    const auto& sm = shared_matrix();
    auto k = analyze_kernel(sm);
    for (std::size_t i = 3; i <= 8; ++i) {
        CHECK(k.minors[i].is_zero());
    }
    for (std::size_t i : {0u, 1u, 2u, 9u}) {
        CHECK_FALSE(k.minors[i].is_zero());
    }
    // Minor 0 is a multiple of (p + q)u - 2qv: cross ratios with minor 9 agree.
    const auto& f = sm.forms;
    auto raw0 = (f.p + f.q) * f.u - scale(f.q * f.v, 2);
    auto raw9 = scale(f.q * f.q, 2) - f.p * f.q - f.p * f.p;
    auto lhs = k.minors[0] * raw9;
    auto rhs = k.minors[9] * raw0;
    CHECK(eq_to_order(lhs, rhs, std::min(lhs.truncation(), rhs.truncation())));
}

TEST_CASE("identity-patterned matrix has unit minor")
{
    auto m = nine_by_ten_identity(40);
    CHECK(agree(signed_minor(m, 0), LaurentSeries::one(40)));
    CHECK(signed_minor(m, 9).is_zero());
}

TEST_CASE("swapping two rows flips every signed minor")
{
    const auto& sm = shared_matrix();
    auto swapped = sm.m;
    swapped.swap_rows(0, 4);
    for (std::size_t i : {0u, 1u, 9u}) {
        auto a = signed_minor(sm.m, i);
        auto b = signed_minor(swapped, i);
        auto sum = a + b;
        CHECK(sum.is_zero());
    }
}

TEST_CASE("kernel relation at 800")
{
    auto rel = kernel_relation(shared_matrix());
    const auto& f = shared_matrix().forms;
    CHECK(agree(rel.coefficients[0], f.u));
    CHECK(agree(rel.coefficients[1], f.u));
    CHECK(agree(rel.coefficients[2], f.u));
    for (std::size_t i = 3; i <= 8; ++i) {
        CHECK(rel.coefficients[i].is_zero());
    }
    CHECK(agree(rel.coefficients[9], -(f.p + scale(f.q, 2))));

    auto k = analyze_kernel(shared_matrix());
    CHECK(k.ok());
    CHECK(k.residual.size() == 9);
    for (const auto& r : k.residual) {
        CHECK(r.is_zero());
    }
    CHECK(k.u_equals_v);
    CHECK(k.raw_equals_scaled_relation);
    CHECK(k.factorization_holds);
    CHECK(k.minors_proportional_to_raw);
    CHECK(k.rank_certified);
}

TEST_CASE("M a = 0 computed directly")
{
    const auto& sm = shared_matrix();
    auto rel = kernel_relation(sm);
    std::vector<LaurentSeries> a(rel.coefficients.begin(), rel.coefficients.end());
    for (const auto& r : multiply(sm.m, a)) {
        CHECK(r.is_zero());
        CHECK(r.truncation() >= 700);
    }
}

TEST_CASE("a perturbed matrix is rejected")
{
    auto sm = shared_matrix();
    sm.m(3, 0) = sm.forms.p; // q -> p in one entry
    CHECK_THROWS_WITH_AS(kernel_relation(sm), doctest::Contains("kernel extraction failed"), CheckFailed);
}

TEST_CASE("duplicate columns force the complementary minors to vanish")
{
    auto m = nine_by_ten_identity(40);
    // Column 0 duplicates column 5.
    m(4, 0) = LaurentSeries::one(40);
    for (std::size_t i = 0; i < 10; ++i) {
        auto s = signed_minor(m, i);
        if (i == 0 || i == 5) {
            CHECK_FALSE(s.is_zero());
        } else {
            CHECK(s.is_zero());
        }
    }
    CHECK((signed_minor(m, 0) + signed_minor(m, 5)).is_zero());
}

TEST_CASE("rank certificate")
{
    CHECK(kernel_dimension_certificate(shared_matrix().m));
    CHECK_THROWS_AS(kernel_dimension_certificate(4), PrecisionError);
    SeriesMatrix zero(9, 10, 30);
    CHECK_THROWS_WITH_AS(kernel_dimension_certificate(zero), doctest::Contains("precision exhausted"), PrecisionError);
}

TEST_CASE("zero pattern is exact from the closed forms")
{
    // Assembled from closed forms only, the middle minors are exactly zero
    // because of the block structure, at any truncation.
    for (Exponent T : {200, 500}) {
        auto sm = structure_matrix(T);
        auto k = analyze_kernel(sm);
        CHECK(k.middle_minors_vanish);
    }
}

}

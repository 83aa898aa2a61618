#include <doctest.h>

#include <cmath>
#include <random>

#include "errors.hpp"
#include "oracle_check.hpp"
#include "theta.hpp"
#include "torus.hpp"

using namespace tmirror;
using namespace tmirror::torus;

namespace {

Rational r(long n, long d = 1)
{
    return make_rational(n, d);
}

AffineMap random_unimodular(std::mt19937_64& rng)
{
    // Products of elementary shears and a reflection.
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> amount(-3, 3);
    AffineMap m = identity_map();
    for (int step = 0; step < 4; ++step) {
        AffineMap e = identity_map();
        switch (pick(rng)) {
        case 0: e.linear[1] = amount(rng); break;
        case 1: e.linear[2] = amount(rng); break;
        default: e.linear[3] = -1; break;
        }
        e.translation = {r(amount(rng), 7), r(amount(rng), 5)};
        m = compose(e, m);
    }
    return m;
}

} // namespace

TEST_SUITE("torus") {

TEST_CASE("map images")
{
    CHECK(apply(rho_map(), TorusPoint(r(1, 3), r(0))) == TorusPoint(r(1, 3), r(0)));
    CHECK(apply(rho_map(), x_point(1)) == PlanePoint{r(1, 3), r(1)});
    for (long k = -9; k <= 9; ++k) {
        CHECK(TorusPoint(apply(phi_map(k), PlanePoint{r(0), r(0)})) == TorusPoint(z_point(k)));
    }
    CHECK(TorusPoint(r(5, 3), r(-1, 4)) == TorusPoint(r(2, 3), r(3, 4)));
}

TEST_CASE("gamma cubed is rho")
{
    CHECK(power(gamma_map(), 3) == rho_map());
    CHECK(compose(gamma_map(), compose(gamma_map(), gamma_map())) == rho_map());
    CHECK(power(gamma_map(), 0) == identity_map());
}

TEST_CASE("symplectic characters")
{
    CHECK(symplectic_character(rho_map()) == 1);
    CHECK(symplectic_character(gamma_map()) == 1);
    CHECK(symplectic_character(identity_map()) == 1);
    for (long k = -3; k < 12; ++k) {
        CHECK(symplectic_character(phi_map(k)) == -1);
        CHECK(determinant(phi_map(k)) == -1);
    }
    AffineMap stretch = identity_map();
    stretch.linear[0] = 2;
    CHECK_THROWS_WITH_AS(symplectic_character(stretch), "not area-preserving", DomainError);
}

TEST_CASE("character is multiplicative under composition")
{
    std::mt19937_64 rng(1234);
    std::vector<AffineMap> maps{rho_map(), gamma_map(), phi_map(1), phi_map(4)};
    for (int i = 0; i < 40; ++i) {
        maps.push_back(random_unimodular(rng));
    }
    for (const auto& f : maps) {
        for (const auto& g : maps) {
            CHECK(symplectic_character(compose(f, g)) == symplectic_character(f) * symplectic_character(g));
        }
    }
}

TEST_CASE("phi moves the triangle vertices for every k")
{
    for (long k = -20; k <= 20; ++k) {
        CHECK(phi_vertex_check(k));
    }
}

TEST_CASE("phi vertex images computed directly")
{
    // Independent of phi_vertex_check: evaluate the formula by hand.
    for (long k = 0; k < 9; ++k) {
        auto phi = [k](Rational x, Rational y) {
            return TorusPoint(x / 2 - r(7, 18) * y + r(k, 9), -2 * y);
        };
        CHECK(phi(r(0), r(0)) == TorusPoint(r(k, 9), r(0)));
        // rho(Y_k) = (k/6, k/2)
        CHECK(phi(r(k, 6), r(k, 2)) == TorusPoint(r(0), r(0)));
        CHECK(phi(r(k, 9), r(0)) == TorusPoint(r(k, 6), r(0)));
    }
}

TEST_CASE("lagrangian lines")
{
    auto l = line(2);
    CHECK(l.slope == 6);
    CHECK(l.trivial_local_system);
    CHECK(l.grading == doctest::Approx(std::atan(6.0)));
    CHECK(l.index_grading == doctest::Approx(std::atan(2.0)));
    CHECK(line(0).slope == 0);

    CHECK(intersection_points(line(0), line(1)).size() == 3);
    CHECK(intersection_points(line(0), line(2)).size() == 6);
    CHECK(intersection_points(line(0), line(3)).size() == 9);
    CHECK(intersection_points(line(1), line(3)).size() == 6);
    auto pts = intersection_points(line(0), line(2));
    for (long i = 0; i < 6; ++i) {
        CHECK(pts[i] == TorusPoint(y_point(i)));
    }
}

TEST_CASE("oracle reproduces A_1 from the minimal triangle")
{
    auto bins = triangle_oracle(r(0), r(3), r(6), 700);
    auto it = bins.find({r(1, 3), r(1, 6)});
    REQUIRE(it != bins.end());
    CHECK(it->second == theta::family_series(theta::Family::A, 1, 700));
    CHECK(it->second.valuation() == 12);
}

TEST_CASE("oracle minimal Y X triangle has exponent 4")
{
    auto bins = triangle_oracle(r(1, 6), r(6), r(9), 400);
    auto it = bins.find({r(1, 3), r(2, 9)});
    REQUIRE(it != bins.end());
    CHECK(it->second.valuation() == 4);
    CHECK(it->second.leading() == 1);
}

TEST_CASE("degenerate triangle contributes the constant 1")
{
    auto bins = triangle_oracle(r(0), r(3), r(6), 1);
    auto it = bins.find({r(0), r(0)});
    REQUIRE(it != bins.end());
    CHECK(it->second == LaurentSeries::one(1));
}

TEST_CASE("oracle bins are stable under raising the truncation")
{
    auto lo = triangle_oracle(r(1, 6), r(6), r(9), 500);
    auto hi = triangle_oracle(r(1, 6), r(6), r(9), 1500);
    for (const auto& [key, series] : lo) {
        REQUIRE(hi.count(key) == 1);
        CHECK(eq_to_order(series, hi.at(key), 500));
        CHECK(series.valuation() >= 0);
        for (const auto& c : series.coefficients()) {
            CHECK(c.get_den() == 1);
        }
    }
}

TEST_CASE("oracle argument validation")
{
    CHECK_THROWS_AS(triangle_oracle(r(0), r(6), r(3), 100), InvalidArgument);
    CHECK_THROWS_AS(triangle_oracle(r(0), r(0), r(3), 100), InvalidArgument);
    CHECK_THROWS_WITH_AS(triangle_oracle(r(1, 7), r(3), r(6), 500), "area not commensurate with base",
                         DomainError);
}

TEST_CASE("oracle against the closed-form products")
{
    CHECK(oracle_vs_theta(600));
    CHECK(oracle_vs_theta(0));
    auto all = oracle_comparisons(600);
    CHECK(all.size() == 12);
    for (const auto& c : all) {
        CHECK_MESSAGE(c.match, configuration_name(c.configuration), " ", c.base_index, ": ", c.detail);
    }
}

TEST_CASE("reversing the orientation breaks the oracle")
{
    CHECK_FALSE(oracle_vs_theta(600, OracleOptions{-1}));
}

}

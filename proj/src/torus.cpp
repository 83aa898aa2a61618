#include "torus.hpp"

#include <algorithm>
#include <cmath>

#include "errors.hpp"

namespace tmirror::torus {

Rational mod1(const Rational& v)
{
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    Rational out = v - Rational(fl);
    return out;
}

TorusPoint::TorusPoint(const Rational& x, const Rational& y) : x_(mod1(x)), y_(mod1(y)) {}

PlanePoint x_point(std::int64_t i)
{
    return {make_rational(i, 3), Rational(0)};
}

PlanePoint y_point(std::int64_t i)
{
    return {make_rational(i, 6), Rational(0)};
}

PlanePoint z_point(std::int64_t i)
{
    return {make_rational(i, 9), Rational(0)};
}

AffineMap identity_map()
{
    return AffineMap{};
}

AffineMap gamma_map()
{
    return AffineMap{{Rational(1), Rational(0), Rational(1), Rational(1)}, {Rational(0), Rational(0)}};
}

AffineMap rho_map()
{
    return AffineMap{{Rational(1), Rational(0), Rational(3), Rational(1)}, {Rational(0), Rational(0)}};
}

AffineMap phi_map(std::int64_t k)
{
    return AffineMap{{make_rational(1, 2), make_rational(-7, 18), Rational(0), Rational(-2)},
                     {make_rational(k, 9), Rational(0)}};
}

AffineMap compose(const AffineMap& f, const AffineMap& g)
{
    const auto& a = f.linear;
    const auto& b = g.linear;
    AffineMap out;
    out.linear = {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                  a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    out.translation = {a[0] * g.translation[0] + a[1] * g.translation[1] + f.translation[0],
                       a[2] * g.translation[0] + a[3] * g.translation[1] + f.translation[1]};
    return out;
}

AffineMap power(const AffineMap& f, unsigned n)
{
    AffineMap out = identity_map();
    for (unsigned i = 0; i < n; ++i) {
        out = compose(f, out);
    }
    return out;
}

PlanePoint apply(const AffineMap& map, const PlanePoint& p)
{
    const auto& m = map.linear;
    return {m[0] * p.x + m[1] * p.y + map.translation[0], m[2] * p.x + m[3] * p.y + map.translation[1]};
}

TorusPoint apply(const AffineMap& map, const TorusPoint& p)
{
    return TorusPoint(apply(map, p.representative()));
}

Rational determinant(const AffineMap& map)
{
    const auto& m = map.linear;
    return m[0] * m[3] - m[1] * m[2];
}

int symplectic_character(const AffineMap& map)
{
    const Rational det = determinant(map);
    if (det == 1) {
        return 1;
    }
    if (det == -1) {
        return -1;
    }
    throw DomainError("not area-preserving");
}

bool phi_vertex_check(std::int64_t k)
{
    const AffineMap phi = phi_map(k);
    const auto same = [](const PlanePoint& a, const PlanePoint& b) { return TorusPoint(a) == TorusPoint(b); };
    return same(apply(phi, x_point(0)), z_point(k)) &&
           same(apply(phi, apply(rho_map(), y_point(k))), x_point(0)) &&
           same(apply(phi, z_point(k)), y_point(k));
}

LagrangianLine line(std::int64_t k)
{
    LagrangianLine out;
    out.slope = Rational(3 * k);
    out.offset_class = Rational(0);
    out.grading = std::atan(static_cast<double>(3 * k));
    out.index_grading = std::atan(static_cast<double>(k));
    return out;
}

std::vector<TorusPoint> intersection_points(const LagrangianLine& a, const LagrangianLine& b)
{
    if (a.slope.get_den() != 1 || b.slope.get_den() != 1) {
        throw DomainError("intersection points need integral slopes");
    }
    const Rational diff = b.slope - a.slope;
    if (diff == 0) {
        throw DomainError("lines are not transverse");
    }
    // s_a (x - c_a) = s_b (x - c_b) + integer.
    const Rational shift = b.slope * b.offset_class - a.slope * a.offset_class;
    const long count = Rational(abs(diff)).get_num().get_si();
    std::vector<TorusPoint> out;
    for (long i = 0; i < count; ++i) {
        const Rational x = (shift + Rational(i)) / diff;
        out.emplace_back(x, a.slope * (x - a.offset_class));
    }
    std::sort(out.begin(), out.end(), [](const TorusPoint& l, const TorusPoint& r) { return l.x() < r.x(); });
    return out;
}

namespace {

Rational triangle_area(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c)
{
    const Rational twice = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
    return abs(twice) / 2;
}

} // namespace

OracleBins triangle_oracle(const Rational& base_x, const Rational& s1, const Rational& s2,
                           Exponent truncation, OracleOptions options)
{
    if (sgn(s1) <= 0 || s2 <= s1) {
        throw InvalidArgument("triangle oracle needs 0 < s1 < s2");
    }
    std::map<BinKey, std::map<Exponent, Rational>> bins;

    const PlanePoint v1{base_x, Rational(0)};
    // Returns false once the triangle for m is too large to matter.
    const auto visit = [&](const mpz_class& m) {
        // y = s1 (x - base_x) meets y = s2 x + m.
        const Rational x2 = -(Rational(m) + s1 * base_x) / (s2 - s1);
        const PlanePoint v2{x2, s1 * (x2 - base_x)};
        const PlanePoint v3{-Rational(m) / s2, Rational(0)};
        const Rational weight = 144 * triangle_area(v1, v2, v3);
        if (weight.get_den() != 1) {
            throw DomainError("area not commensurate with base");
        }
        if (weight >= truncation) {
            return false;
        }
        const Exponent e = options.area_sign * weight.get_num().get_si();
        bins[{mod1(v2.x), mod1(v3.x)}][e] += 1;
        return true;
    };

    if (truncation > 0) {
        // The area is a convex quadratic in m, vanishing at m0 = -s2 base_x.
        const Rational m0 = -s2 * base_x;
        mpz_class start;
        mpz_fdiv_q(start.get_mpz_t(), m0.get_num_mpz_t(), m0.get_den_mpz_t());
        for (mpz_class m = start; visit(m) || Rational(m) <= m0; ++m) {
        }
        for (mpz_class m = start - 1; visit(m) || Rational(m) >= m0; --m) {
        }
    }

    OracleBins out;
    for (const auto& [key, terms] : bins) {
        out.emplace(key, LaurentSeries::from_terms(terms, truncation));
    }
    return out;
}

} // namespace tmirror::torus

#pragma once

// The torus R^2/Z^2 with omega = tau dx^dy, its affine (anti-)symplectic
// maps, the linear Lagrangian lines L_k of slope 3k, and a flat-triangle
// counter that rebuilds product coefficients from symplectic areas.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "series.hpp"

namespace tmirror::torus {

// Representative in [0, 1).
Rational mod1(const Rational& v);

// A point of the universal cover R^2.
struct PlanePoint {
    Rational x;
    Rational y;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// A point of R^2/Z^2, coordinates reduced to [0, 1).
class TorusPoint {
public:
    TorusPoint() = default;
    TorusPoint(const Rational& x, const Rational& y);
    explicit TorusPoint(const PlanePoint& lift) : TorusPoint(lift.x, lift.y) {}

    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }
    PlanePoint representative() const { return {x_, y_}; }

    friend bool operator==(const TorusPoint&, const TorusPoint&) = default;

private:
    Rational x_;
    Rational y_;
};

// X_i = (i/3, 0), Y_i = (i/6, 0), Z_i = (i/9, 0) as lifts.
PlanePoint x_point(std::int64_t i);
PlanePoint y_point(std::int64_t i);
PlanePoint z_point(std::int64_t i);

// p -> linear * p + translation. linear is row-major {a, b, c, d}.
struct AffineMap {
    std::array<Rational, 4> linear{Rational(1), Rational(0), Rational(0), Rational(1)};
    std::array<Rational, 2> translation{Rational(0), Rational(0)};

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

AffineMap identity_map();
// (x, y) -> (x, y + x), the minimal Dehn twist.
AffineMap gamma_map();
// (x, y) -> (x, y + 3x).
AffineMap rho_map();
// (x, y) -> (x/2 - 7y/18 + k/9, -2y). Its linear part is not integral, so it
// only makes sense on lifts.
AffineMap phi_map(std::int64_t k);

// f after g.
AffineMap compose(const AffineMap& f, const AffineMap& g);
AffineMap power(const AffineMap& f, unsigned n);

PlanePoint apply(const AffineMap& map, const PlanePoint& p);
// Applies the map to the canonical representative and reduces mod Z^2.
TorusPoint apply(const AffineMap& map, const TorusPoint& p);

Rational determinant(const AffineMap& map);

// +1 for symplectomorphisms, -1 for anti-symplectomorphisms. Throws
// DomainError("not area-preserving") otherwise.
int symplectic_character(const AffineMap& map);

// phi(X_0) = Z_k, phi(rho(Y_k)) = X_0 and phi(Z_k) = Y_k, all mod Z^2.
bool phi_vertex_check(std::int64_t k);

struct LagrangianLine {
    Rational slope;
    Rational offset_class; // x-intercept mod 1 of the lift through the origin family
    double grading = 0.0;  // atan(slope)
    double index_grading = 0.0; // atan(k) for L_k; recorded, unused
    bool trivial_local_system = true;
};

// L_k = rho^k S, the slope-3k line through the origin. S = L_0.
LagrangianLine line(std::int64_t k);

// Transverse intersection points of two lines through lattice points with
// integral slopes, as points of the torus sorted by x.
std::vector<TorusPoint> intersection_points(const LagrangianLine& a, const LagrangianLine& b);

using BinKey = std::pair<Rational, Rational>; // (middle vertex x-class, end vertex x-class)
using OracleBins = std::map<BinKey, LaurentSeries>;

struct OracleOptions {
    // Multiplies every area; -1 reverses the orientation of omega.
    int area_sign = 1;
};

// Counts the flat triangles with V1 = (base_x, 0), an edge of slope s1 through
// V1, an edge on y = s2 x + m and an edge on y = 0, over all integers m. Each
// triangle contributes y^(144 * area); contributions with |exponent| < T are
// binned by (x(V2) mod 1, x(V3) mod 1). Requires 0 < s1 < s2. Throws
// DomainError("area not commensurate with base") on a non-integral exponent.
OracleBins triangle_oracle(const Rational& base_x, const Rational& s1, const Rational& s2,
                           Exponent truncation, OracleOptions options = {});

} // namespace tmirror::torus

#ifndef RFA_SPHERE_HPP
#define RFA_SPHERE_HPP

#include "rfa/polynomial.hpp"

namespace rfa {

/// A point of the extended complex plane, identified with the Riemann sphere
/// of radius 1/2 via stereographic projection.
struct SpherePoint {
    Complex value{0.0, 0.0};
    bool infinite = false;

    SpherePoint() = default;
    SpherePoint(Complex z) : value(z) {}
    SpherePoint(double x) : value(x, 0.0) {}

    static SpherePoint infinity() {
        SpherePoint p;
        p.infinite = true;
        return p;
    }

    bool operator==(const SpherePoint& o) const {
        if (infinite || o.infinite) return infinite == o.infinite;
        return value == o.value;
    }
};

/// Chordal metric: the euclidean distance of stereographic images,
/// chi(x, y) = |x - y| / (sqrt(1+|x|^2) sqrt(1+|y|^2)), with
/// chi(x, inf) = 1/sqrt(1+|x|^2).  Range [0, 1]; 1 for antipodal points.
double chordal(const SpherePoint& x, const SpherePoint& y);
inline double chordal(Complex x, Complex y) { return chordal(SpherePoint(x), SpherePoint(y)); }

/// Geodesic length on the radius-1/2 sphere: arcsin(chordal).  Satisfies
/// chi <= sigma <= (pi/2) chi and sigma(0, inf) = pi/2.
double spherical_distance(const SpherePoint& x, const SpherePoint& y);

/// r extended to the sphere: value at infinity through the reversed pair,
/// a finite zero of q maps to infinity.  Throws IndeterminateError at a
/// common root of p and q.
SpherePoint value_on_sphere(const RationalFunction& r, const SpherePoint& z);

} // namespace rfa

#endif

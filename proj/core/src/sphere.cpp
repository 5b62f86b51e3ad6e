#include "rfa/sphere.hpp"

#include <algorithm>
#include <cmath>

#include "rfa/errors.hpp"

namespace rfa {

double chordal(const SpherePoint& x, const SpherePoint& y) {
    if (x.infinite && y.infinite) return 0.0;
    if (x.infinite) return 1.0 / std::hypot(1.0, std::abs(y.value));
    if (y.infinite) return 1.0 / std::hypot(1.0, std::abs(x.value));
    const double num = std::abs(x.value - y.value);
    // divide sequentially so the denominator product cannot overflow
    return num / std::hypot(1.0, std::abs(x.value)) / std::hypot(1.0, std::abs(y.value));
}

double spherical_distance(const SpherePoint& x, const SpherePoint& y) {
    return std::asin(std::min(1.0, chordal(x, y)));
}

SpherePoint value_on_sphere(const RationalFunction& r, const SpherePoint& z) {
    if (z.infinite) return value_on_sphere(r.reversed(), SpherePoint(Complex(0.0)));

    const Complex pv = r.p().eval(z.value);
    const Complex qv = r.q().eval(z.value);
    if (std::abs(pv) == 0.0 && std::abs(qv) == 0.0)
        throw IndeterminateError("common root of numerator and denominator", z.value);
    if (std::abs(qv) == 0.0) return SpherePoint::infinity();
    const Complex v = pv / qv;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return SpherePoint::infinity();
    return SpherePoint(v);
}

} // namespace rfa

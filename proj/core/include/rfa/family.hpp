#ifndef RFA_FAMILY_HPP
#define RFA_FAMILY_HPP

#include <vector>

#include "rfa/polynomial.hpp"

namespace rfa {

/// The stress family p = z^m, q = ((z-1)/2)^m perturbed along its Bezout
/// cofactors: q u - p v = 1, pt = p - eta u, qt = q - eta v.  The scalar
/// eta > 0 is sized so that twice the perturbation norm equals the full-plane
/// coprimeness measure 3^{-m}.  On this family the value distance between
/// p/q and pt/qt outgrows the coefficient distance exponentially.
struct BezoutFamily {
    int m = 1;
    Polynomial p, q;    // z^m, ((z-1)/2)^m
    Polynomial u, v;    // cofactors, degree <= m-1
    Polynomial pt, qt;  // perturbed pair
    double eta = 0.0;
    double u_norm1 = 0.0;
    double v_norm1 = 0.0;
    double perturbation_norm1 = 0.0;  // |(p-pt, q-qt)|_1 = eta * u_norm1
    double bezout_residual = 0.0;     // |coeffs(q u - p v - 1)|_2
    double identity_residual = 0.0;   // |coeffs(p qt - pt q - eta)|_2 / scale
    double perturbed_pair_norm1 = 0.0;
};

/// Valid for 1 <= m <= 12; beyond that the cofactor growth ~ 8^m exhausts
/// double precision and the constructor refuses.
BezoutFamily make_bezout_family(int m);

struct GrowthRow {
    int m = 0;
    double eta = 0.0;
    double eps = 0.0;            // 3^{-m}
    double delta_norm1 = 0.0;    // |(p-pt, q-qt)|_1
    double chi_disk = 0.0;       // value distance over the unit disk
    double chi_over_delta = 0.0;
    double window_lo = 0.0;      // eta/(3 eps^2) / delta
    double window_hi = 0.0;      // 2 eta/eps^2 / delta
    double d = 0.0;              // coefficient distance
    double chi_over_d = 0.0;
    double chi_d_floor = 0.0;    // 1/(12 |u|_1 eps^2)
    double ratio_growth = 0.0;   // (chi/d)/eps, diverges like sqrt(m) (27/8)^m
    double u_norm1 = 0.0;
    double u_asym_ratio = 0.0;   // |u|_1 / (2^{3m-1}/sqrt(pi m))
    double sylv_inv_ratio = 0.0; // |S(0)^-1|_1 / |u|_1
};

/// One row per m in [m_min, m_max] (1 <= m_min <= m_max <= 10).
std::vector<GrowthRow> growth_study(int m_min, int m_max, int density = 48);

} // namespace rfa

#endif

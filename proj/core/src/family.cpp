#include "rfa/family.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rfa/metrics.hpp"
#include "rfa/region.hpp"
#include "rfa/sylvester.hpp"

namespace rfa {

BezoutFamily make_bezout_family(int m) {
    if (m < 1 || m > 12)
        throw std::invalid_argument("family order must be in [1, 12]: cofactor 1-norms grow like "
                                    "8^m and exhaust double precision beyond that");

    BezoutFamily f;
    f.m = m;
    f.p = Polynomial({Complex(0.0), Complex(1.0)}).pow(m);
    f.q = Polynomial({Complex(-0.5), Complex(0.5)}).pow(m);

    // cofactors: q u - p v = 1 via the square Sylvester system of (q, -p)
    DiophantineSolution sol =
        diophantine_solve(f.q, f.p.scaled(Complex(-1.0)), m, m, Polynomial({Complex(1.0)}));
    f.u = sol.u;
    f.v = sol.v;
    f.bezout_residual = sol.residual;
    f.u_norm1 = f.u.coeff_norm(1);
    f.v_norm1 = f.v.coeff_norm(1);

    // eta > 0 with 2 |(p-pt, q-qt)|_1 = 2 eta |u|_1 = 3^{-m}
    f.eta = std::pow(3.0, -m) / (2.0 * f.u_norm1);
    f.pt = f.p - f.u.scaled(Complex(f.eta));
    f.qt = f.q - f.v.scaled(Complex(f.eta));
    f.perturbation_norm1 = PolynomialPair(f.p - f.pt, f.q - f.qt).norm(1);
    f.perturbed_pair_norm1 = PolynomialPair(f.pt, f.qt).norm(1);

    // cross identity p qt - pt q = eta, relative to the product scale
    Polynomial cross = f.p * f.qt - f.pt * f.q;
    Polynomial residual = cross - Polynomial({Complex(f.eta)});
    const double scale =
        std::max(1.0, PolynomialPair(f.p, f.q).norm(2) * PolynomialPair(f.pt, f.qt).norm(2));
    f.identity_residual = residual.coeff_norm(2) / scale;
    return f;
}

std::vector<GrowthRow> growth_study(int m_min, int m_max, int density) {
    if (m_min < 1 || m_max > 10 || m_min > m_max)
        throw std::invalid_argument("growth study range must sit inside [1, 10]");

    std::vector<GrowthRow> rows;
    const Region disk = Region::unit_disk();
    for (int m = m_min; m <= m_max; ++m) {
        BezoutFamily f = make_bezout_family(m);
        GrowthRow row;
        row.m = m;
        row.eta = f.eta;
        row.eps = std::pow(3.0, -m);
        row.delta_norm1 = f.perturbation_norm1;

        RationalFunction r(f.p, f.q, m, m), rt(f.pt, f.qt, m, m);
        ChiOptions copts;
        copts.density = density;
        row.chi_disk = chi_over(r, rt, disk, copts).value;
        row.chi_over_delta = row.chi_disk / row.delta_norm1;
        row.window_lo = f.eta / (3.0 * row.eps * row.eps) / row.delta_norm1;
        row.window_hi = 2.0 * f.eta / (row.eps * row.eps) / row.delta_norm1;

        row.d = coeff_distance(r, rt);
        row.chi_over_d = row.d > 0.0 ? row.chi_disk / row.d : 0.0;
        row.chi_d_floor = 1.0 / (12.0 * f.u_norm1 * row.eps * row.eps);
        row.ratio_growth = row.chi_over_d / row.eps;

        row.u_norm1 = f.u_norm1;
        row.u_asym_ratio =
            f.u_norm1 / (std::pow(2.0, 3 * m - 1) / std::sqrt(std::numbers::pi * m));
        const SylvesterMatrix s0(f.p, f.q, m, m, 0);
        row.sylv_inv_ratio = inverse_norm1(s0) / f.u_norm1;
        rows.push_back(row);
    }
    return rows;
}

} // namespace rfa

#include "rfa/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rfa/errors.hpp"
#include "search.hpp"

namespace rfa {

namespace {

double denom_floor(const RationalFunction& r, Complex z) {
    const double scale = std::max(r.p().coeff_norm(2), r.q().coeff_norm(2));
    const double zp = std::pow(std::max(1.0, std::abs(z)), std::max(r.m(), r.n()));
    return 1e-26 * scale * scale * zp * zp;
}

std::vector<SpherePoint> derivative_seeds(const RationalFunction& r, const Region& region) {
    // roots of p and q inside the region, plus points between each zero/pole
    // pair: the spherical derivative peaks between close pairs and a plain
    // grid can step over such a peak entirely
    std::vector<SpherePoint> seeds;
    std::vector<Complex> zeros, poles;
    if (!r.p().is_zero(1e-14)) zeros = roots(r.p()).finite;
    poles = roots(r.q()).finite;
    for (Complex z : zeros)
        if (region.contains(SpherePoint(z), 1e-9)) seeds.emplace_back(z);
    for (Complex z : poles)
        if (region.contains(SpherePoint(z), 1e-9)) seeds.emplace_back(z);
    for (Complex zp : zeros)
        for (Complex zq : poles) detail::add_segment_seeds(seeds, zp, zq, 7);
    std::vector<SpherePoint> kept;
    for (const SpherePoint& s : seeds)
        if (region.contains(s, 1e-9)) kept.push_back(s);
    return kept;
}

SphericalIndicators sup_impl(const RationalFunction& r, const Region& region,
                             const SupOptions& opts, bool want_rho, bool want_nu);

} // namespace

double rho_at(const RationalFunction& r, Complex z) {
    const Complex pv = r.p().eval(z);
    const Complex qv = r.q().eval(z);
    const double denom = std::norm(pv) + std::norm(qv);
    if (denom <= denom_floor(r, z))
        throw IndeterminateError("spherical derivative indeterminate at a common root", z);
    const Complex wr = r.p().derivative().eval(z) * qv - pv * r.q().derivative().eval(z);
    return std::abs(wr) / denom;
}

double nu_at(const RationalFunction& r, Complex z) { return (1.0 + std::norm(z)) * rho_at(r, z); }

namespace {

SphericalIndicators sup_impl(const RationalFunction& r, const Region& region,
                             const SupOptions& opts, bool want_rho, bool want_nu) {
    SphericalIndicators out;
    out.grid_density = opts.density;

    if (region.kind() == Region::Kind::FullPlane) {
        if (want_rho)
            throw std::invalid_argument(
                "spherical derivative supremum over the full plane is rejected; "
                "use nu or a bounded region");
        // nu splits exactly: nu_plane(r) = max over the closed unit disk of
        // nu(r) and nu(r o inv), since nu(r o inv)(w) = nu(r)(1/w)
        SupOptions sub = opts;
        sub.extra_seeds.clear();
        for (const SpherePoint& c : opts.extra_seeds)
            if (!c.infinite && std::abs(c.value) <= 1.0) sub.extra_seeds.push_back(c);
        SphericalIndicators inside = sup_impl(r, Region::unit_disk(), sub, false, true);

        SupOptions rsub = opts;
        rsub.extra_seeds.clear();
        for (const SpherePoint& c : opts.extra_seeds) {
            if (c.infinite)
                rsub.extra_seeds.emplace_back(Complex(0.0));
            else if (std::abs(c.value) >= 1.0 && c.value != Complex(0.0))
                rsub.extra_seeds.emplace_back(Complex(1.0) / c.value);
        }
        SphericalIndicators rev = sup_impl(r.reversed(), Region::unit_disk(), rsub, false, true);

        out.nu_valid = true;
        if (inside.nu >= rev.nu) {
            out.nu = inside.nu;
            out.argmax_nu = inside.argmax_nu;
        } else {
            out.nu = rev.nu;
            out.argmax_nu = rev.argmax_nu.value == Complex(0.0)
                                ? SpherePoint::infinity()
                                : SpherePoint(Complex(1.0) / rev.argmax_nu.value);
        }
        return out;
    }

    detail::MinimizeOptions mopts;
    mopts.density = opts.density;
    mopts.polish_starts = opts.polish_starts;
    mopts.extra_seeds = opts.extra_seeds;
    if (opts.seed_roots)
        for (const SpherePoint& s : derivative_seeds(r, region)) mopts.extra_seeds.push_back(s);

    auto neg_guarded = [&](auto&& f) {
        return [&, f](const SpherePoint& z) {
            if (z.infinite) return std::numeric_limits<double>::infinity();
            try {
                return -f(z.value);
            } catch (const IndeterminateError&) {
                return std::numeric_limits<double>::infinity();
            }
        };
    };

    if (want_rho) {
        auto [best, polished] = detail::minimize_over(
            neg_guarded([&](Complex z) { return rho_at(r, z); }), region, mopts);
        (void)polished;
        if (std::isfinite(best.value)) {
            out.rho = rho_at(r, best.z.value);
            out.argmax_rho = best.z;
            out.rho_valid = true;
        }
    }
    if (want_nu) {
        auto [best, polished] = detail::minimize_over(
            neg_guarded([&](Complex z) { return nu_at(r, z); }), region, mopts);
        (void)polished;
        if (std::isfinite(best.value)) {
            out.nu = nu_at(r, best.z.value);
            out.argmax_nu = best.z;
            out.nu_valid = true;
        }
    }
    return out;
}

} // namespace

SphericalIndicators spherical_indicators(const RationalFunction& r, const Region& region,
                                         const SupOptions& opts) {
    return sup_impl(r, region, opts, /*want_rho=*/region.kind() != Region::Kind::FullPlane,
                    /*want_nu=*/true);
}

SphericalIndicators rho_sup(const RationalFunction& r, const Region& region,
                            const SupOptions& opts) {
    return sup_impl(r, region, opts, true, false);
}

SphericalIndicators nu_sup(const RationalFunction& r, const Region& region, const SupOptions& opts) {
    return sup_impl(r, region, opts, false, true);
}

double lipschitz_ratio_sup(const RationalFunction& r, const Region& region, PairMetric metric,
                           int pair_samples) {
    if (metric == PairMetric::Euclid && !region.is_convex())
        throw std::invalid_argument("euclidean Lipschitz ratio needs a convex region");
    if (metric == PairMetric::Chordal && !region.is_spherically_convex())
        throw std::invalid_argument("chordal Lipschitz ratio needs a spherically convex region");
    if (pair_samples < 1) throw std::invalid_argument("need at least one pair");

    // grid size so that all-pairs stays within the pair budget
    int npts = std::max(2, int(std::sqrt(2.0 * double(pair_samples))));
    int density = 1;
    if (region.kind() == Region::Kind::Segment) {
        density = std::max(1, npts - 1);
    } else {
        while (1 + 6 * density * density < npts && density < 64) ++density;
    }

    std::vector<SpherePoint> pts = region.sample(density);
    // near-coincident pairs at the polished derivative argmax give the sup a
    // witness at the Lipschitz limit
    SupOptions sopts;
    sopts.density = std::min(density, 24);
    SphericalIndicators ind = sup_impl(r, region, sopts, metric == PairMetric::Euclid,
                                       metric == PairMetric::Chordal);
    const SpherePoint& am = metric == PairMetric::Euclid ? ind.argmax_rho : ind.argmax_nu;
    if ((metric == PairMetric::Euclid && ind.rho_valid) ||
        (metric == PairMetric::Chordal && ind.nu_valid))
        pts.push_back(am);

    auto ratio = [&](Complex a, Complex b) -> double {
        const double d = metric == PairMetric::Euclid ? std::abs(a - b) : chordal(a, b);
        if (d == 0.0) return 0.0;
        try {
            const SpherePoint va = value_on_sphere(r, SpherePoint(a));
            const SpherePoint vb = value_on_sphere(r, SpherePoint(b));
            return chordal(va, vb) / d;
        } catch (const IndeterminateError&) {
            return 0.0;
        }
    };

    double sup = 0.0;
    long budget = pair_samples;
    for (size_t i = 0; i < pts.size() && budget > 0; ++i) {
        for (size_t j = i + 1; j < pts.size() && budget > 0; ++j) {
            if (pts[i].infinite || pts[j].infinite) continue;
            sup = std::max(sup, ratio(pts[i].value, pts[j].value));
            --budget;
        }
    }
    // difference quotients at coincidence
    for (const SpherePoint& p : pts) {
        if (p.infinite) continue;
        const double h = 1e-6 * (1.0 + std::abs(p.value));
        for (Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0)}) {
            const Complex other = region.project(p.value + h * dir);
            if (other != p.value) sup = std::max(sup, ratio(p.value, other));
        }
    }
    return sup;
}

std::vector<ResidueCheck> residue_bound_check(const RationalFunction& r, const Region& region,
                                              const SupOptions& opts) {
    std::vector<ResidueCheck> out;
    RootSet poles = roots(r.q());
    std::vector<Complex> in_region;
    for (Complex z : poles.finite)
        if (region.contains(SpherePoint(z), 1e-9)) in_region.push_back(z);
    if (in_region.empty()) return out;

    SphericalIndicators ind = rho_sup(r, region, opts);
    for (Complex z : in_region) {
        ResidueCheck c;
        c.pole = z;
        double min_sep = std::numeric_limits<double>::infinity();
        for (Complex w : poles.finite)
            if (w != z) min_sep = std::min(min_sep, std::abs(w - z));
        if (min_sep < 1e-7 * (1.0 + std::abs(z))) {
            c.simple = false;  // clustered: treated as a multiple pole
            out.push_back(c);
            continue;
        }
        // a vanishing numerator makes the singularity removable, not a pole
        const double pscale = r.p().coeff_norm(2) *
                              std::pow(std::max(1.0, std::abs(z)), std::max(0, r.m()));
        if (std::abs(r.p().eval(z)) <= 1e-10 * std::max(pscale, 1e-300)) {
            c.simple = false;
            out.push_back(c);
            continue;
        }
        try {
            c.residue = residue_at_simple_pole(r, z);
        } catch (const std::exception&) {
            c.simple = false;
            out.push_back(c);
            continue;
        }
        c.bound = ind.rho_valid && ind.rho > 0.0 ? 1.0 / ind.rho : 0.0;
        c.ok = std::abs(c.residue) >= c.bound * (1.0 - 1e-9);
        out.push_back(c);
    }
    return out;
}

PowerRuleCheck power_rule_check(const RationalFunction& r, int mpow, Complex z) {
    if (mpow < 1) throw std::invalid_argument("power must be >= 1");
    PowerRuleCheck c;
    c.lhs = rho_at(r.pow(mpow), z);
    c.rhs = 2.0 * double(mpow) * rho_at(r, z);
    c.ok = c.lhs <= c.rhs * (1.0 + 1e-9);
    return c;
}

} // namespace rfa

#include "rfa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rfa/coprimeness.hpp"
#include "rfa/errors.hpp"
#include "rfa/sylvester.hpp"
#include "search.hpp"

namespace rfa {

namespace {

struct CrossEval {
    Polynomial cross;  // p*qt - pt*q, expanded once
    const RationalFunction* r;
    const RationalFunction* rt;

    double at(const SpherePoint& z) const {
        if (z.infinite) {
            // evaluate the reversed configuration at 0
            const int d = std::max({r->m(), r->n(), rt->m(), rt->n()});
            RationalFunction rr(r->p().reversed(d), r->q().reversed(d), d, d);
            RationalFunction rtr(rt->p().reversed(d), rt->q().reversed(d), d, d);
            CrossEval rev{rr.p() * rtr.q() - rtr.p() * rr.q(), &rr, &rtr};
            return rev.at(SpherePoint(Complex(0.0)));
        }
        const Complex zz = z.value;
        const double num = std::abs(cross.eval(zz));
        const double d1 = std::hypot(std::abs(r->p().eval(zz)), std::abs(r->q().eval(zz)));
        const double d2 = std::hypot(std::abs(rt->p().eval(zz)), std::abs(rt->q().eval(zz)));
        const double floor1 = 1e-13 * std::max(r->p().coeff_norm(2), r->q().coeff_norm(2)) *
                              std::pow(std::max(1.0, std::abs(zz)), std::max(r->m(), r->n()));
        const double floor2 = 1e-13 * std::max(rt->p().coeff_norm(2), rt->q().coeff_norm(2)) *
                              std::pow(std::max(1.0, std::abs(zz)), std::max(rt->m(), rt->n()));
        if (d1 <= floor1 || d2 <= floor2)
            throw IndeterminateError("chordal distance indeterminate at a common root", zz);
        return num / d1 / d2;
    }
};

} // namespace

double chi_at(const RationalFunction& r, const RationalFunction& rt, const SpherePoint& z) {
    CrossEval ce{r.p() * rt.q() - rt.p() * r.q(), &r, &rt};
    return ce.at(z);
}

ChiSup chi_over(const RationalFunction& r, const RationalFunction& rt, const Region& region,
                const ChiOptions& opts) {
    CrossEval ce{r.p() * rt.q() - rt.p() * r.q(), &r, &rt};

    detail::MinimizeOptions mopts;
    mopts.density = opts.density;
    mopts.polish_starts = opts.polish_starts;
    mopts.extra_seeds = opts.extra_seeds;
    // poles of either function are where one factor of the denominator is
    // smallest; useful supremum seeds
    for (const RationalFunction* f : {&r, &rt}) {
        for (Complex z : roots(f->q()).finite)
            if (region.contains(SpherePoint(z), 1e-9)) mopts.extra_seeds.emplace_back(z);
        if (!f->p().is_zero(1e-14))
            for (Complex z : roots(f->p()).finite)
                if (region.contains(SpherePoint(z), 1e-9)) mopts.extra_seeds.emplace_back(z);
    }

    auto objective = [&](const SpherePoint& z) {
        try {
            return -ce.at(z);
        } catch (const IndeterminateError&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    auto [best, polished] = detail::minimize_over(objective, region, mopts);
    (void)polished;

    ChiSup out;
    out.grid_density = opts.density;
    if (std::isfinite(best.value)) {
        out.argmax = best.z;
        out.value = ce.at(best.z);
    }
    return out;
}

double coeff_distance(const RationalFunction& r, const RationalFunction& rt) {
    const int m = std::max(r.m(), rt.m());
    const int n = std::max(r.n(), rt.n());

    auto stacked = [&](const RationalFunction& f) {
        std::vector<Complex> u;
        const Polynomial p = f.p().padded(m), q = f.q().padded(n);
        u.insert(u.end(), p.coeffs().begin(), p.coeffs().end());
        u.insert(u.end(), q.coeffs().begin(), q.coeffs().end());
        double norm = 0.0;
        for (Complex c : u) norm += std::norm(c);
        norm = std::sqrt(norm);
        if (norm == 0.0) throw std::invalid_argument("zero pair has no coefficient direction");
        for (Complex& c : u) c /= norm;
        return u;
    };

    const std::vector<Complex> u = stacked(r);
    const std::vector<Complex> v = stacked(rt);

    Complex inner(0.0, 0.0);  // <u, v> = sum conj(v_k) u_k
    for (size_t k = 0; k < u.size(); ++k) inner += std::conj(v[k]) * u[k];

    // minimizing phase a = <u,v>/|<u,v>|; then compute |u - a v| directly,
    // which stays accurate when the two directions nearly coincide
    const double ai = std::abs(inner);
    const Complex a = ai > 0.0 ? inner / ai : Complex(1.0, 0.0);
    double acc = 0.0;
    for (size_t k = 0; k < u.size(); ++k) acc += std::norm(u[k] - a * v[k]);
    return std::sqrt(acc);
}

DistanceVerdict distance_comparison(const RationalFunction& r, const RationalFunction& rt,
                                    const Region& region, const ChiOptions& opts) {
    const int m = std::max(r.m(), rt.m());
    const int n = std::max(r.n(), rt.n());
    if (!region.subset_of_closed_unit_disk() && m != n)
        throw std::invalid_argument("distance comparison needs K inside the unit disk or m == n");

    DistanceVerdict v;
    v.region = region.describe();

    ChiSup chi = chi_over(r, rt, region, opts);
    v.chi_K = chi.value;
    v.d = coeff_distance(r, rt);

    const PolynomialPair diff(r.p().padded(m) - rt.p().padded(m),
                              r.q().padded(n) - rt.q().padded(n));
    v.delta_norm1 = diff.norm(1);

    // evaluate the coprimeness measure over the same region, joined with the
    // chi argmax so the product bound is exact over a common candidate set
    CoprimenessOptions copts;
    copts.density = opts.density;
    copts.polish_starts = opts.polish_starts;
    copts.extra_candidates.push_back(chi.argmax);
    CoprimenessResult eps = coprimeness_over(r.p(), r.q(), m, n, 1, region, copts);
    v.eps1_K = std::min(eps.value, coprimeness_at(r.p(), r.q(), m, n, 1, chi.argmax));

    v.lhs = v.eps1_K * v.chi_K;
    v.rhs = std::sqrt(2.0) * v.delta_norm1;
    v.coprimeness_bound_ok = v.lhs <= v.rhs * (1.0 + 1e-9);

    // condition-number sandwich; stated for K = the closed unit disk
    const SylvesterMatrix s1(r.p(), r.q(), m, n, 1);
    if (s1.full_row_rank() && v.d > 0.0) {
        const bool is_unit_disk =
            region.kind() == Region::Kind::UnitDisk && !region.inverted();
        const double chi_disk =
            is_unit_disk ? v.chi_K : chi_over(r, rt, Region::unit_disk(), opts).value;
        v.cond2_s1 = s1.cond2();
        const double dim = double(m + n + 1);
        v.sandwich_lower = std::pow(dim, -1.5) / (std::sqrt(2.0) * v.cond2_s1);
        v.sandwich_upper = std::sqrt(2.0 * dim) * v.cond2_s1;
        const double ratio = chi_disk / v.d;
        v.sandwich_ok = ratio >= v.sandwich_lower * (1.0 - 1e-9) &&
                        ratio <= v.sandwich_upper * (1.0 + 1e-9);
        v.sandwich_applicable = true;
    }
    return v;
}

} // namespace rfa

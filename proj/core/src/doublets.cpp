#include "rfa/doublets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rfa/coprimeness.hpp"
#include "rfa/errors.hpp"
#include "rfa/spherical.hpp"
#include "rfa/sylvester.hpp"

namespace rfa {

namespace {

std::vector<SpherePoint> sphere_roots(const Polynomial& poly) {
    std::vector<SpherePoint> out;
    if (poly.is_zero(1e-14)) return out;
    RootSet rs = roots(poly);
    for (Complex z : rs.finite) out.emplace_back(z);
    for (int k = 0; k < rs.at_infinity; ++k) out.push_back(SpherePoint::infinity());
    return out;
}

bool less_point(const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.infinite) return false;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
}

} // namespace

std::vector<ZeroPolePair> pairs_from_roots(const std::vector<SpherePoint>& zeros,
                                           const std::vector<SpherePoint>& poles, double tol) {
    std::vector<SpherePoint> zs = zeros, ps = poles;
    std::sort(zs.begin(), zs.end(), less_point);
    std::sort(ps.begin(), ps.end(), less_point);

    std::vector<ZeroPolePair> out;
    out.reserve(zs.size() * ps.size());
    for (const SpherePoint& z : zs) {
        for (const SpherePoint& p : ps) {
            ZeroPolePair pair;
            pair.zero = z;
            pair.pole = p;
            pair.chi = chordal(z, p);
            if (!z.infinite && !p.infinite) pair.euclid = std::abs(z.value - p.value);
            pair.degenerate = pair.chi < tol;
            out.push_back(pair);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const ZeroPolePair& a, const ZeroPolePair& b) {
        if (a.chi != b.chi) return a.chi < b.chi;
        if (less_point(a.zero, b.zero)) return true;
        if (less_point(b.zero, a.zero)) return false;
        return less_point(a.pole, b.pole);
    });
    return out;
}

std::vector<ZeroPolePair> zero_pole_pairs(const RationalFunction& r, double tol) {
    return pairs_from_roots(sphere_roots(r.p()), sphere_roots(r.q()), tol);
}

CertificateSet certificates(const RationalFunction& r, const Region& region,
                            const CertificateOptions& opts) {
    CertificateSet out;
    const int m = r.m(), n = r.n();

    const std::vector<SpherePoint> zeros = sphere_roots(r.p());
    const std::vector<SpherePoint> poles = sphere_roots(r.q());
    std::vector<ZeroPolePair> pairs = pairs_from_roots(zeros, poles, opts.pair_tol);

    // Khat = region samples joined with the roots; the bounds below are
    // valid for the exact minimum over this finite set
    std::vector<SpherePoint> root_candidates;
    bool all_in_disk = region.subset_of_closed_unit_disk();
    bool all_outside_disk = region.subset_of_closed_unit_disk_exterior();
    bool borderline = false;
    for (const auto& list : {zeros, poles}) {
        for (const SpherePoint& z : list) {
            root_candidates.push_back(z);
            const double az = z.infinite ? std::numeric_limits<double>::infinity()
                                         : std::abs(z.value);
            if (!(az <= 1.0 + 1e-12)) all_in_disk = false;
            if (!(az >= 1.0 - 1e-12)) all_outside_disk = false;
            if (std::abs(az - 1.0) <= 1e-12) borderline = true;
        }
    }
    out.borderline_disk = borderline;
    out.min_variant = all_in_disk || all_outside_disk;

    CoprimenessOptions copts;
    copts.density = opts.density;
    copts.polish_starts = opts.polish_starts;
    copts.extra_candidates = root_candidates;
    // region search first, then the roots pointwise: roots outside the
    // region still belong to Khat
    for (int s : {1, 2}) {
        CoprimenessResult res = coprimeness_over(r.p(), r.q(), m, n, s, region, copts);
        double best = res.value;
        SpherePoint arg = res.argmin;
        for (const SpherePoint& z : root_candidates) {
            const double v = coprimeness_at(r.p(), r.q(), m, n, s, z);
            if (v < best) {
                best = v;
                arg = z;
            }
        }
        (s == 1 ? out.eps1 : out.eps2) = best;
        (s == 1 ? out.eps1_argmin : out.eps2_argmin) = arg;
    }

    const SylvesterMatrix s1(r.p(), r.q(), m, n, 1);
    out.nondegenerate = s1.full_row_rank();
    if (out.nondegenerate) out.cond2_s1 = s1.cond2();

    SupOptions sopts;
    sopts.density = opts.density;
    sopts.polish_starts = opts.polish_starts;
    const bool bounded = region.is_bounded() && region.kind() != Region::Kind::FullPlane;
    SphericalIndicators ind;
    if (bounded) {
        ind = spherical_indicators(r, region, sopts);
        out.rho_K = ind.rho;
        out.nu_K = ind.nu;
        out.rho_valid = ind.rho_valid;
        out.nu_valid = ind.nu_valid;
    } else if (region.kind() == Region::Kind::FullPlane) {
        ind = nu_sup(r, region, sopts);
        out.nu_K = ind.nu;
        out.nu_valid = ind.nu_valid;
    }

    const double cond_c = opts.perturbed_roots ? 6.0 : 3.0;
    const double dim = double(m + n + 1);
    const double cond_denom = out.nondegenerate
                                  ? cond_c * std::sqrt(2.0) * std::pow(dim, 1.5) * out.cond2_s1
                                  : 0.0;

    auto coprime_bound = [&](int s, double eps) -> std::optional<double> {
        const double pn = r.p().coeff_norm(s), qn = r.q().coeff_norm(s);
        if (opts.perturbed_roots) {
            const double pair_norm = PolynomialPair(r.p(), r.q()).norm(s);
            const double denom = 6.0 * double(m + n) * pair_norm;
            if (denom <= 0.0) return std::nullopt;
            return eps / denom;
        }
        const double mp = double(m) * pn, nq = double(n) * qn;
        const double denom = out.min_variant ? std::min(mp, nq) : std::max(mp, nq);
        if (denom <= 0.0) return std::nullopt;
        return eps / (2.0 * denom);
    };

    out.certificates.reserve(pairs.size());
    for (const ZeroPolePair& pair : pairs) {
        DoubletCertificate cert;
        cert.pair = pair;
        cert.roots_in_region =
            region.contains(pair.zero, 1e-9) && region.contains(pair.pole, 1e-9);

        const bool both_finite = !pair.zero.infinite && !pair.pole.infinite;
        const bool both_in_disk =
            both_finite && std::abs(pair.zero.value) <= 1.0 + 1e-12 &&
            std::abs(pair.pole.value) <= 1.0 + 1e-12;

        if (both_finite) {
            cert.bounds.coprime_bound_s1 = coprime_bound(1, out.eps1);
            cert.bounds.coprime_bound_s2 = coprime_bound(2, out.eps2);
        }
        if (both_in_disk && out.nondegenerate && cond_denom > 0.0)
            cert.bounds.cond_bound = 1.0 / cond_denom;
        if (both_finite && out.rho_valid && out.rho_K > 0.0 && region.is_convex() &&
            cert.roots_in_region)
            cert.bounds.rho_bound = 1.0 / out.rho_K;
        if (both_finite && out.nu_valid && out.nu_K > 0.0 && region.is_spherically_convex() &&
            cert.roots_in_region)
            cert.bounds.nu_bound = 2.0 / (std::numbers::pi * out.nu_K);

        cert.flagged = pair.chi < opts.flag_threshold;
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

std::vector<DoubletCertificate> detect(const RationalFunction& r, double threshold_chi,
                                       const Region& region, const CertificateOptions& opts) {
    CertificateOptions o = opts;
    o.flag_threshold = threshold_chi;
    CertificateSet set = certificates(r, region, o);
    std::vector<DoubletCertificate> flagged;
    for (const DoubletCertificate& c : set.certificates)
        if (c.flagged) flagged.push_back(c);
    return flagged;
}

} // namespace rfa

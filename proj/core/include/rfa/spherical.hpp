#ifndef RFA_SPHERICAL_HPP
#define RFA_SPHERICAL_HPP

#include <vector>

#include "rfa/region.hpp"
#include "rfa/sphere.hpp"

namespace rfa {

/// Spherical derivative |r'(z)| / (1 + |r(z)|^2) in the pole-safe form
/// |p'q - pq'| / (|p|^2 + |q|^2), finite at poles.  Throws
/// IndeterminateError at a common root of p and q.
double rho_at(const RationalFunction& r, Complex z);

/// (1 + |z|^2) * rho(r)(z); controls chordal-to-chordal Lipschitz behaviour.
double nu_at(const RationalFunction& r, Complex z);

struct SphericalIndicators {
    double rho = 0.0;
    double nu = 0.0;
    SpherePoint argmax_rho;
    SpherePoint argmax_nu;
    int grid_density = 0;
    /// suprema are search results over a finite set: lower bounds on the sup
    bool rho_valid = false;
    bool nu_valid = false;
};

struct SupOptions {
    int density = 48;
    int polish_starts = 10;
    std::vector<SpherePoint> extra_seeds;
    bool seed_roots = true;
};

/// Suprema of rho and nu over the region (samples, root/segment seeds, local
/// polish).  rho over the full plane is rejected; nu over the full plane uses
/// the exact reversal identity nu(r o inv)(w) = nu(r)(1/w).
SphericalIndicators spherical_indicators(const RationalFunction& r, const Region& region,
                                         const SupOptions& opts = {});
SphericalIndicators rho_sup(const RationalFunction& r, const Region& region,
                            const SupOptions& opts = {});
SphericalIndicators nu_sup(const RationalFunction& r, const Region& region,
                           const SupOptions& opts = {});

enum class PairMetric { Euclid, Chordal };

/// sup over sampled pairs z1 != z2 of chi(r(z1), r(z2)) / d(z1, z2), where d
/// is |z1 - z2| (requires convex region) or chi(z1, z2) (requires spherically
/// convex region).  The pair set joins grid pairs with near-coincident pairs
/// at each grid point and at the polished derivative argmax, so the reported
/// value approaches the true Lipschitz constant from below.
double lipschitz_ratio_sup(const RationalFunction& r, const Region& region, PairMetric metric,
                           int pair_samples);

struct ResidueCheck {
    Complex pole{0.0, 0.0};
    Complex residue{0.0, 0.0};
    double bound = 0.0;  // 1 / rho_K
    bool ok = false;
    bool simple = true;  // false: skipped with a notice, bound not applicable
};

/// For each simple pole of r inside the region: |residue| >= 1/rho_K(r).
/// Non-simple (clustered) poles are reported with simple = false and skipped.
std::vector<ResidueCheck> residue_bound_check(const RationalFunction& r, const Region& region,
                                              const SupOptions& opts = {});

struct PowerRuleCheck {
    double lhs = 0.0;  // rho(r^m)(z)
    double rhs = 0.0;  // 2m rho(r)(z)
    bool ok = false;
};

/// rho(r^m)(z) <= 2m rho(r)(z).
PowerRuleCheck power_rule_check(const RationalFunction& r, int mpow, Complex z);

} // namespace rfa

#endif

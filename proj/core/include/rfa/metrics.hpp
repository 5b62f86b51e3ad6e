#ifndef RFA_METRICS_HPP
#define RFA_METRICS_HPP

#include <string>
#include <vector>

#include "rfa/region.hpp"
#include "rfa/sphere.hpp"

namespace rfa {

/// chi(r(z), rt(z)) through the pole-safe cross formula
/// |p qt - pt q|(z) / (sqrt(|p|^2+|q|^2) sqrt(|pt|^2+|qt|^2)).
/// Throws IndeterminateError at a common root of either pair.
double chi_at(const RationalFunction& r, const RationalFunction& rt, const SpherePoint& z);

struct ChiSup {
    double value = 0.0;
    SpherePoint argmax;
    int grid_density = 0;
};

struct ChiOptions {
    int density = 48;
    int polish_starts = 10;
    std::vector<SpherePoint> extra_seeds;
};

/// sup_z chi(r(z), rt(z)) over the region via grid + refinement; a lower
/// bound on the true supremum.
ChiSup chi_over(const RationalFunction& r, const RationalFunction& rt, const Region& region,
                const ChiOptions& opts = {});

/// Phase-minimized euclidean distance of normalized stacked coefficient
/// vectors: min over |a| = 1 of |u - a v|_2 with u, v the stacked (p, q) and
/// (pt, qt) coefficient vectors, each normalized.  Zero exactly for
/// proportional pairs; sqrt(2) for orthogonal ones.
double coeff_distance(const RationalFunction& r, const RationalFunction& rt);

/// Comparison of the value distance chi_K and the coefficient distance d.
struct DistanceVerdict {
    double chi_K = 0.0;
    double d = 0.0;
    std::string region;

    /// coprimeness-weighted bound: eps1_K * chi_K <= sqrt(2) |delta|_1
    double eps1_K = 0.0;
    double delta_norm1 = 0.0;
    double lhs = 0.0;  // eps1_K * chi_K
    double rhs = 0.0;  // sqrt(2) * delta_norm1
    bool coprimeness_bound_ok = false;

    /// condition-number sandwich for K = unit disk:
    /// (m+n+1)^{-3/2} / (sqrt(2) cond) <= chi_D / d <= sqrt(2(m+n+1)) cond
    double cond2_s1 = 0.0;
    double sandwich_lower = 0.0;
    double sandwich_upper = 0.0;
    bool sandwich_ok = false;
    bool sandwich_applicable = false;  // false when d == 0 or degenerate
};

/// Requires region inside the closed unit disk, or m == n; throws
/// std::invalid_argument otherwise.
DistanceVerdict distance_comparison(const RationalFunction& r, const RationalFunction& rt,
                                    const Region& region, const ChiOptions& opts = {});

} // namespace rfa

#endif

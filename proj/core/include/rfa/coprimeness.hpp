#ifndef RFA_COPRIMENESS_HPP
#define RFA_COPRIMENESS_HPP

#include <string>
#include <vector>

#include "rfa/region.hpp"
#include "rfa/sphere.hpp"

namespace rfa {

struct CoprimenessOptions {
    int density = 48;
    int polish_starts = 10;
    /// Additional candidate points joined to the grid (e.g. roots); the
    /// reported value is the exact minimum over the final finite candidate
    /// set, hence an upper bound on the true infimum.
    std::vector<SpherePoint> extra_candidates;
    bool seed_roots = true;
};

/// Pointwise coprimeness objective at z for nominal bounds (m, n):
///   s=2: sqrt(|p(z)|^2 / sum_{j<=m} |z|^{2j} + |q(z)|^2 / sum_{j<=n} |z|^{2j})
///   s=1: max(|p(z)|/max(1,|z|^m), |q(z)|/max(1,|z|^n))
/// For |z| > 1 and at infinity the reversed-coefficient form is used; the
/// identity value(z) = reversed_value(1/z) is exact.
double coprimeness_at(const Polynomial& p, const Polynomial& q, int m, int n, int s,
                      const SpherePoint& z);

struct CoprimenessResult {
    double value = 0.0;
    SpherePoint argmin;
    int s = 2;
    std::string region;
    std::string method;  // "grid+refine" or "finite-exact"
    int grid_density = 0;
};

/// Infimum search of the pointwise objective over the region: grid samples,
/// the roots of p and q inside the region, plus local refinement.  The full
/// plane splits into the unit disk of (p, q) and the unit disk of the
/// reversed pair.  The result is an upper bound on the true infimum.
CoprimenessResult coprimeness_over(const Polynomial& p, const Polynomial& q, int m, int n, int s,
                                   const Region& region, const CoprimenessOptions& opts = {});

/// Certified lower bound from the Sylvester factorization:
///   s=2: 1 / (sqrt(m+n+1) |S(ell)^+|_2),  s=1: 1 / |S(0)^-1|_1.
/// Throws DegeneracyError for degenerate pairs.
double coprimeness_lower_bound(const Polynomial& p, const Polynomial& q, int m, int n, int ell,
                               int s);

/// Perturbation sensitivity certificate.  Part (a): a perturbation within
/// 1/(3 sqrt(m+n+1) |S(1)^+|_2) moves cond2(S(1)) by at most a factor 2.
/// Part (b): a perturbation within half the coprimeness measure moves the
/// measure by a factor in [1/2, 3/2].  Both objectives are evaluated over a
/// shared candidate set so the ratio bounds carry over to computed values.
struct SensitivityVerdict {
    double delta2 = 0.0;     // |(p-pt, q-qt)|_2
    double delta_s = 0.0;    // |(p-pt, q-qt)|_s
    double radius_a = 0.0;   // admissible radius for (a)
    double radius_b = 0.0;   // admissible radius for (b)
    bool hypothesis_a = false;
    bool hypothesis_b = false;
    double cond_ratio = 0.0;  // cond2(S1(pt,qt)) / cond2(S1(p,q))
    double eps_ratio = 0.0;   // measure(pt,qt) / measure(p,q)
    bool a_ok = false;        // hypothesis_a implies cond_ratio in [1/2, 2]
    bool b_ok = false;        // hypothesis_b implies eps_ratio in [1/2, 3/2]
};

SensitivityVerdict sensitivity_certificate(const Polynomial& p, const Polynomial& q,
                                           const Polynomial& pt, const Polynomial& qt, int m, int n,
                                           int s, const Region& region,
                                           const CoprimenessOptions& opts = {});

} // namespace rfa

#endif

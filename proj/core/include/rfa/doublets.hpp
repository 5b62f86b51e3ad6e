#ifndef RFA_DOUBLETS_HPP
#define RFA_DOUBLETS_HPP

#include <optional>
#include <vector>

#include "rfa/region.hpp"
#include "rfa/sphere.hpp"

namespace rfa {

struct ZeroPolePair {
    SpherePoint zero;
    SpherePoint pole;
    double chi = 0.0;
    std::optional<double> euclid;  // finite pairs only
    bool degenerate = false;       // chordal distance below the pairing tolerance
};

/// All (zero of p) x (root of q) combinations including roots at infinity,
/// sorted ascending by chordal distance (lexicographic tie-break so the
/// result does not depend on root enumeration order).
std::vector<ZeroPolePair> zero_pole_pairs(const RationalFunction& r, double tol = 1e-12);

/// Pairing from explicit root sets; zero_pole_pairs is this applied to the
/// computed roots of p and q.
std::vector<ZeroPolePair> pairs_from_roots(const std::vector<SpherePoint>& zeros,
                                           const std::vector<SpherePoint>& poles,
                                           double tol = 1e-12);

struct DoubletBounds {
    /// 1/(c sqrt(2) (m+n+1)^{3/2} cond2(S(1))), on the euclidean distance;
    /// applies when both points lie in the closed unit disk (c = 3, or 6 for
    /// perturbed roots).
    std::optional<double> cond_bound;
    /// eps_s^Khat / (2 max(m|p|_s, n|q|_s)) on the chordal distance; max
    /// becomes min when Khat lies in the closed unit disk or its exterior.
    /// Perturbed-root variant: eps_s^Khat / (6 (m+n) |(p,q)|_s).
    std::optional<double> coprime_bound_s1;
    std::optional<double> coprime_bound_s2;
    /// 1/rho_K on the euclidean distance (finite pairs, convex region).
    std::optional<double> rho_bound;
    /// 2/(pi nu_K) on the chordal distance (spherically convex region).
    std::optional<double> nu_bound;
};

struct DoubletCertificate {
    ZeroPolePair pair;
    DoubletBounds bounds;
    bool roots_in_region = false;  // hypothesis echo for the certificates
    bool flagged = false;
};

struct CertificateSet {
    std::vector<DoubletCertificate> certificates;
    // shared indicators the bounds were derived from; the coprimeness
    // measures are taken over Khat = region samples joined with ALL roots
    // (also those outside the region), which is what keeps the bounds valid
    double eps1 = 0.0, eps2 = 0.0;
    SpherePoint eps1_argmin, eps2_argmin;
    double cond2_s1 = 0.0;
    bool nondegenerate = false;
    double rho_K = 0.0, nu_K = 0.0;
    bool rho_valid = false, nu_valid = false;
    bool min_variant = false;  // coprime bounds used min instead of max
    bool borderline_disk = false;  // a root within 1e-12 of the unit circle
};

struct CertificateOptions {
    int density = 48;
    int polish_starts = 10;
    double pair_tol = 1e-12;
    double flag_threshold = 1e-3;
    /// weakened constants for roots of a perturbed pair (robust variant)
    bool perturbed_roots = false;
};

/// Separation certificates for every zero/pole pair.  The coprimeness
/// measures are exact minima over the finite set (region grid joined with the
/// roots), which is what makes the bounds valid certificates.  The condition
/// bound is tied to the shift-1 matrix by its statement.
CertificateSet certificates(const RationalFunction& r, const Region& region,
                            const CertificateOptions& opts = {});

/// Pairs with chordal distance below the threshold, each carrying its
/// certificates so the report shows which indicator failed to be large.
/// The two-argument form audits over the closed unit disk.
std::vector<DoubletCertificate> detect(const RationalFunction& r, double threshold_chi,
                                       const Region& region,
                                       const CertificateOptions& opts = {});
inline std::vector<DoubletCertificate> detect(const RationalFunction& r, double threshold_chi) {
    return detect(r, threshold_chi, Region::unit_disk());
}

} // namespace rfa

#endif

#ifndef RFA_SRC_SEARCH_HPP
#define RFA_SRC_SEARCH_HPP

// Internal deterministic grid + pattern-search minimizer shared by the
// coprimeness, spherical and metrics implementations.  Not installed.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "rfa/region.hpp"

namespace rfa::detail {

struct Candidate {
    SpherePoint z;
    double value = std::numeric_limits<double>::infinity();
};

// Compass pattern search constrained to the region (iterates projected back
// onto it).  Deterministic; robust at kinks where the objective is a max/min
// of smooth branches.  Minimizes.
template <class F>
Candidate pattern_search_min(F&& f, const Region& region, Complex z0, double h0,
                             int max_iter = 600) {
    static const double kDirRe[8] = {1, 0.7071067811865476, 0, -0.7071067811865476,
                                     -1, -0.7071067811865476, 0, 0.7071067811865476};
    static const double kDirIm[8] = {0, 0.7071067811865476, 1, 0.7071067811865476,
                                     0, -0.7071067811865476, -1, -0.7071067811865476};

    Complex z = region.project(z0);
    double fz = f(z);
    double h = h0;
    const double h_floor = 1e-13;
    for (int it = 0; it < max_iter && h > h_floor * (1.0 + std::abs(z)); ++it) {
        Complex best_z = z;
        double best_f = fz;
        for (int d = 0; d < 8; ++d) {
            const Complex cand = region.project(z + h * Complex(kDirRe[d], kDirIm[d]));
            const double fc = f(cand);
            if (fc < best_f) {
                best_f = fc;
                best_z = cand;
            }
        }
        if (best_f < fz) {
            z = best_z;
            fz = best_f;
        } else {
            h *= 0.5;
        }
    }
    return {SpherePoint(z), fz};
}

struct MinimizeOptions {
    int density = 48;
    int polish_starts = 10;
    std::vector<SpherePoint> extra_seeds;
};

// Grid scan over region samples plus extra seeds, then pattern-search polish
// from the best starts on kinds with a continuous projection.  Returns the
// best candidate and whether any polish ran (point sets are evaluated
// exactly, nothing to refine).
template <class F>
std::pair<Candidate, bool> minimize_over(F&& f, const Region& region,
                                         const MinimizeOptions& opts) {
    std::vector<Candidate> evals;
    auto consider = [&](const SpherePoint& z) {
        const double v = f(z);
        if (std::isfinite(v)) evals.push_back({z, v});
    };
    for (const SpherePoint& z : region.sample(opts.density)) consider(z);
    for (const SpherePoint& z : opts.extra_seeds)
        if (region.contains(z, 1e-9)) consider(z);

    if (evals.empty()) return {Candidate{}, false};
    std::stable_sort(evals.begin(), evals.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });

    const bool polishable = !region.inverted() && (region.kind() == Region::Kind::UnitDisk ||
                                                   region.kind() == Region::Kind::Disk ||
                                                   region.kind() == Region::Kind::Segment);
    Candidate best = evals.front();
    if (!polishable) return {best, false};

    double scale = 1.0;
    if (region.kind() == Region::Kind::Segment)
        scale = std::abs(region.endpoint_b() - region.endpoint_a());
    else
        scale = region.radius();
    const double h0 = std::max(1e-8, 2.0 * scale / std::max(1, opts.density));

    auto f_complex = [&](Complex z) { return f(SpherePoint(z)); };
    const int starts = std::min<int>(opts.polish_starts, int(evals.size()));
    for (int i = 0; i < starts; ++i) {
        if (evals[size_t(i)].z.infinite) continue;
        Candidate c = pattern_search_min(f_complex, region, evals[size_t(i)].z.value, h0);
        if (c.value < best.value) best = c;
    }
    return {best, true};
}

// Pair-segment seeds: interior points between two locations, used to catch
// narrow peaks of the spherical derivative between close zero/pole pairs.
inline void add_segment_seeds(std::vector<SpherePoint>& seeds, Complex a, Complex b, int count) {
    for (int k = 1; k <= count; ++k)
        seeds.emplace_back(a + (double(k) / (count + 1)) * (b - a));
}

} // namespace rfa::detail

#endif

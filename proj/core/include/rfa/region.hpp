#ifndef RFA_REGION_HPP
#define RFA_REGION_HPP

#include <string>
#include <vector>

#include "rfa/sphere.hpp"

namespace rfa {

/// Subsets of the extended plane on which infima/suprema are searched:
/// disks, segments, finite point sets, the closed unit disk, and the full
/// plane.  The full plane is never sampled directly; callers split it into
/// the unit disk plus the unit disk of the reversed problem.
///
/// An inverted region represents the elementwise image 1/K of its base
/// region (the image of the unit disk being the closed exterior).  Disks not
/// containing the origin invert to genuine disks; point sets invert
/// elementwise with 0 mapped to infinity.
class Region {
public:
    enum class Kind { UnitDisk, Disk, Segment, PointSet, FullPlane };

    static Region unit_disk();
    static Region disk(Complex center, double radius);
    static Region segment(Complex a, Complex b);
    static Region point_set(std::vector<SpherePoint> points);
    static Region full_plane();

    Kind kind() const noexcept { return kind_; }
    bool inverted() const noexcept { return inverted_; }
    Complex center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }
    Complex endpoint_a() const noexcept { return a_; }
    Complex endpoint_b() const noexcept { return b_; }
    const std::vector<SpherePoint>& points() const noexcept { return points_; }

    bool is_convex() const;
    bool is_spherically_convex() const;
    bool is_bounded() const;

    /// Deterministic quasi-uniform covering.  Disks: polar grid of `density`
    /// rings times 6*density angles plus the center.  Segments: density+1
    /// equispaced points.  Point sets: the points themselves.  Throws
    /// std::invalid_argument for the full plane (use the inversion split).
    std::vector<SpherePoint> sample(int density) const;

    /// The elementwise image 1/K.
    Region inverse_image() const;

    bool contains(const SpherePoint& z, double tol = 1e-9) const;

    /// K inside the closed unit disk (with 1e-12 slack).
    bool subset_of_closed_unit_disk() const;
    /// K inside the closed exterior of the unit disk, i.e. 1/K in the disk.
    bool subset_of_closed_unit_disk_exterior() const;

    /// Nearest point of the region (finite kinds only); used to constrain
    /// local refinement to the search set.
    Complex project(Complex z) const;

    /// Canonical CLI syntax string.
    std::string describe() const;

    /// Parses "unit-disk", "disk:cx,cy,r", "segment:ax,ay,bx,by",
    /// "points:file.json", "plane".
    static Region parse(const std::string& text);

private:
    Region() = default;

    Kind kind_ = Kind::UnitDisk;
    bool inverted_ = false;
    Complex center_{0.0, 0.0};
    double radius_ = 1.0;
    Complex a_{0.0, 0.0}, b_{0.0, 0.0};
    std::vector<SpherePoint> points_;
};

} // namespace rfa

#endif

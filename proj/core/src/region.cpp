#include "rfa/region.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace rfa {

namespace {

SpherePoint invert_point(const SpherePoint& z) {
    if (z.infinite) return SpherePoint(Complex(0.0));
    if (z.value == Complex(0.0)) return SpherePoint::infinity();
    return SpherePoint(Complex(1.0) / z.value);
}

// spherical length of a segment, used for the spherical-convexity test:
// the direct great-circle arc between any two points of the segment stays
// inside it iff the whole segment is at most a quarter turn
double segment_spherical_length(Complex a, Complex b) {
    const int n = 2048;
    const Complex d = b - a;
    const double step = std::abs(d) / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex z = a + (double(i) + 0.5) / n * d;
        acc += step / (1.0 + std::norm(z));
    }
    return acc;
}

double dist_to_segment(Complex z, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - a);
    double t = ((z - a) * std::conj(d)).real() / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

} // namespace

Region Region::unit_disk() {
    Region r;
    r.kind_ = Kind::UnitDisk;
    r.center_ = Complex(0.0);
    r.radius_ = 1.0;
    return r;
}

Region Region::disk(Complex center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("disk radius must be positive");
    Region r;
    r.kind_ = Kind::Disk;
    r.center_ = center;
    r.radius_ = radius;
    return r;
}

Region Region::segment(Complex a, Complex b) {
    Region r;
    r.kind_ = Kind::Segment;
    r.a_ = a;
    r.b_ = b;
    return r;
}

Region Region::point_set(std::vector<SpherePoint> points) {
    if (points.empty()) throw std::invalid_argument("point set region must be non-empty");
    Region r;
    r.kind_ = Kind::PointSet;
    r.points_ = std::move(points);
    return r;
}

Region Region::full_plane() {
    Region r;
    r.kind_ = Kind::FullPlane;
    return r;
}

bool Region::is_convex() const {
    if (inverted_) return false;
    switch (kind_) {
        case Kind::UnitDisk:
        case Kind::Disk:
        case Kind::Segment:
        case Kind::FullPlane:
            return true;
        case Kind::PointSet:
            return points_.size() <= 1;
    }
    return false;
}

bool Region::is_spherically_convex() const {
    if (inverted_) {
        // 1/K of a spherically convex K is spherically convex (inversion is
        // an isometry of the sphere)
        Region base = *this;
        base.inverted_ = false;
        return base.is_spherically_convex();
    }
    switch (kind_) {
        case Kind::UnitDisk:
        case Kind::Disk:
            return true;
        case Kind::Segment:
            return segment_spherical_length(a_, b_) <= std::numbers::pi / 2.0 + 1e-12;
        case Kind::PointSet:
            return points_.size() <= 1;
        case Kind::FullPlane:
            return true;
    }
    return false;
}

bool Region::is_bounded() const {
    if (kind_ == Kind::FullPlane) return false;
    if (!inverted_) return true;
    // the inverse image is unbounded iff the base region touches 0
    Region base = *this;
    base.inverted_ = false;
    return !base.contains(SpherePoint(Complex(0.0)), 1e-15);
}

std::vector<SpherePoint> Region::sample(int density) const {
    if (density < 1) throw std::invalid_argument("sampling density must be >= 1");
    if (kind_ == Kind::FullPlane)
        throw std::invalid_argument("full plane is not sampled directly; split via inversion");

    if (inverted_) {
        Region base = *this;
        base.inverted_ = false;
        std::vector<SpherePoint> out;
        for (const SpherePoint& z : base.sample(density)) out.push_back(invert_point(z));
        return out;
    }

    std::vector<SpherePoint> out;
    switch (kind_) {
        case Kind::PointSet:
            return points_;
        case Kind::Segment: {
            out.reserve(size_t(density) + 1);
            for (int j = 0; j <= density; ++j)
                out.emplace_back(a_ + (double(j) / density) * (b_ - a_));
            return out;
        }
        case Kind::UnitDisk:
        case Kind::Disk: {
            const int angles = 6 * density;
            out.reserve(1 + size_t(density) * angles);
            out.emplace_back(center_);
            for (int k = 1; k <= density; ++k) {
                const double rad = radius_ * double(k) / density;
                for (int j = 0; j < angles; ++j) {
                    const double th = 2.0 * std::numbers::pi * double(j) / angles;
                    out.emplace_back(center_ + Complex(rad * std::cos(th), rad * std::sin(th)));
                }
            }
            return out;
        }
        case Kind::FullPlane:
            break;
    }
    throw std::logic_error("unreachable region kind");
}

Region Region::inverse_image() const {
    if (kind_ == Kind::FullPlane) return *this;
    if (inverted_) {
        Region r = *this;
        r.inverted_ = false;
        return r;
    }
    if (kind_ == Kind::PointSet) {
        std::vector<SpherePoint> pts;
        pts.reserve(points_.size());
        for (const SpherePoint& z : points_) pts.push_back(invert_point(z));
        return point_set(std::move(pts));
    }
    if (kind_ == Kind::Disk && std::abs(center_) > radius_) {
        // Moebius image of a disk avoiding the origin is again a disk
        const double denom = std::norm(center_) - radius_ * radius_;
        return disk(std::conj(center_) / denom, radius_ / denom);
    }
    Region r = *this;
    r.inverted_ = true;
    return r;
}

bool Region::contains(const SpherePoint& z, double tol) const {
    if (kind_ == Kind::FullPlane) return true;
    if (inverted_) {
        Region base = *this;
        base.inverted_ = false;
        return base.contains(invert_point(z), tol);
    }
    if (z.infinite) {
        if (kind_ == Kind::PointSet)
            return std::any_of(points_.begin(), points_.end(),
                               [](const SpherePoint& p) { return p.infinite; });
        return false;
    }
    switch (kind_) {
        case Kind::UnitDisk:
        case Kind::Disk:
            return std::abs(z.value - center_) <= radius_ * (1.0 + tol) + tol;
        case Kind::Segment:
            return dist_to_segment(z.value, a_, b_) <= tol * (1.0 + std::abs(b_ - a_));
        case Kind::PointSet:
            return std::any_of(points_.begin(), points_.end(), [&](const SpherePoint& p) {
                return !p.infinite && std::abs(p.value - z.value) <= tol * (1.0 + std::abs(z.value));
            });
        case Kind::FullPlane:
            return true;
    }
    return false;
}

bool Region::subset_of_closed_unit_disk() const {
    constexpr double slack = 1e-12;
    if (inverted_) {
        Region base = *this;
        base.inverted_ = false;
        return base.subset_of_closed_unit_disk_exterior();
    }
    switch (kind_) {
        case Kind::UnitDisk:
            return true;
        case Kind::Disk:
            return std::abs(center_) + radius_ <= 1.0 + slack;
        case Kind::Segment:
            // |z| is convex along the segment, so the maximum sits at an end
            return std::abs(a_) <= 1.0 + slack && std::abs(b_) <= 1.0 + slack;
        case Kind::PointSet:
            return std::all_of(points_.begin(), points_.end(), [](const SpherePoint& p) {
                return !p.infinite && std::abs(p.value) <= 1.0 + slack;
            });
        case Kind::FullPlane:
            return false;
    }
    return false;
}

bool Region::subset_of_closed_unit_disk_exterior() const {
    constexpr double slack = 1e-12;
    if (inverted_) {
        Region base = *this;
        base.inverted_ = false;
        return base.subset_of_closed_unit_disk();
    }
    switch (kind_) {
        case Kind::UnitDisk:
            return false;
        case Kind::Disk:
            return std::abs(center_) - radius_ >= 1.0 - slack;
        case Kind::Segment:
            return dist_to_segment(Complex(0.0), a_, b_) >= 1.0 - slack;
        case Kind::PointSet:
            return std::all_of(points_.begin(), points_.end(), [](const SpherePoint& p) {
                return p.infinite || std::abs(p.value) >= 1.0 - slack;
            });
        case Kind::FullPlane:
            return false;
    }
    return false;
}

Complex Region::project(Complex z) const {
    switch (kind_) {
        case Kind::FullPlane:
            return z;
        case Kind::UnitDisk:
        case Kind::Disk: {
            if (inverted_) break;
            const Complex d = z - center_;
            const double ad = std::abs(d);
            if (ad <= radius_) return z;
            return center_ + d * (radius_ / ad);
        }
        case Kind::Segment: {
            if (inverted_) break;
            const Complex d = b_ - a_;
            const double len2 = std::norm(d);
            if (len2 == 0.0) return a_;
            double t = ((z - a_) * std::conj(d)).real() / len2;
            return a_ + std::clamp(t, 0.0, 1.0) * d;
        }
        case Kind::PointSet:
            break;
    }
    // nearest sample for kinds without a continuous projection
    Complex best = z;
    double best_d = std::numeric_limits<double>::infinity();
    for (const SpherePoint& p : sample(1)) {
        if (p.infinite) continue;
        const double d = std::abs(p.value - z);
        if (d < best_d) {
            best_d = d;
            best = p.value;
        }
    }
    return best;
}

std::string Region::describe() const {
    char buf[160];
    std::string s;
    switch (kind_) {
        case Kind::UnitDisk:
            s = "unit-disk";
            break;
        case Kind::Disk:
            std::snprintf(buf, sizeof buf, "disk:%.17g,%.17g,%.17g", center_.real(), center_.imag(),
                          radius_);
            s = buf;
            break;
        case Kind::Segment:
            std::snprintf(buf, sizeof buf, "segment:%.17g,%.17g,%.17g,%.17g", a_.real(), a_.imag(),
                          b_.real(), b_.imag());
            s = buf;
            break;
        case Kind::PointSet:
            s = "points:" + std::to_string(points_.size());
            break;
        case Kind::FullPlane:
            s = "plane";
            break;
    }
    if (inverted_) s = "inverse-of(" + s + ")";
    return s;
}

Region Region::parse(const std::string& text) {
    auto split_params = [](const std::string& body) {
        std::vector<double> vals;
        size_t pos = 0;
        while (pos <= body.size()) {
            size_t comma = body.find(',', pos);
            if (comma == std::string::npos) comma = body.size();
            vals.push_back(std::stod(body.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return vals;
    };

    if (text == "unit-disk") return unit_disk();
    if (text == "plane") return full_plane();
    if (text.rfind("disk:", 0) == 0) {
        auto v = split_params(text.substr(5));
        if (v.size() != 3) throw std::invalid_argument("disk region needs cx,cy,r");
        return disk(Complex(v[0], v[1]), v[2]);
    }
    if (text.rfind("segment:", 0) == 0) {
        auto v = split_params(text.substr(8));
        if (v.size() != 4) throw std::invalid_argument("segment region needs ax,ay,bx,by");
        return segment(Complex(v[0], v[1]), Complex(v[2], v[3]));
    }
    if (text.rfind("points:", 0) == 0) {
        const std::string path = text.substr(7);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open point set file: " + path);
        nlohmann::json j;
        in >> j;
        if (!j.is_array()) throw std::invalid_argument("point set file must be a JSON array");
        std::vector<SpherePoint> pts;
        for (const auto& e : j) {
            if (e.is_string() && e.get<std::string>() == "inf") {
                pts.push_back(SpherePoint::infinity());
            } else if (e.is_array() && e.size() == 2) {
                pts.emplace_back(Complex(e[0].get<double>(), e[1].get<double>()));
            } else {
                throw std::invalid_argument("point entries must be [re, im] or \"inf\"");
            }
        }
        return point_set(std::move(pts));
    }
    throw std::invalid_argument("unrecognized region syntax: " + text);
}

} // namespace rfa

#include <doctest.h>

#include <cmath>
#include <random>

#include "rfa/coprimeness.hpp"
#include "rfa/errors.hpp"

using namespace rfa;

namespace {

double uni(std::mt19937_64& g) { return 2.0 * (double(g() >> 11) * 0x1.0p-53) - 1.0; }
Complex cuni(std::mt19937_64& g) { return Complex(uni(g), uni(g)); }

Polynomial random_poly(std::mt19937_64& g, int deg) {
    std::vector<Complex> c(size_t(deg) + 1);
    for (auto& x : c) x = cuni(g);
    return Polynomial(std::move(c));
}

const Polynomial kP({Complex(0.0), Complex(1.0)});   // z
const Polynomial kQ({Complex(-0.5), Complex(0.5)});  // (z-1)/2

} // namespace

TEST_CASE("pointwise objective values") {
    // s=1 at 1/3: max(1/3, 1/3)
    CHECK(coprimeness_at(kP, kQ, 1, 1, 1, SpherePoint(Complex(1.0 / 3.0, 0.0))) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // s=2 at 0: sqrt(0 + 1/4)
    CHECK(coprimeness_at(kP, kQ, 1, 1, 2, SpherePoint(Complex(0.0))) ==
          doctest::Approx(0.5).epsilon(1e-14));
    // at a root of p the objective reduces to the q term
    CHECK(coprimeness_at(kP, kQ, 1, 1, 1, SpherePoint(Complex(0.0))) ==
          doctest::Approx(0.5).epsilon(1e-14));
    // at infinity: reversed value at 0, the leading coefficients
    CHECK(coprimeness_at(kP, kQ, 1, 1, 1, SpherePoint::infinity()) ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pointwise reversal identity is exact") {
    std::mt19937_64 g(211);
    for (int t = 0; t < 60; ++t) {
        const int m = 1 + int(g() % 5), n = 1 + int(g() % 5);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        Complex z = cuni(g);
        if (std::abs(z) < 0.1) z += Complex(0.4, 0.2);
        for (int s : {1, 2}) {
            const double lhs = coprimeness_at(p, q, m, n, s, SpherePoint(z));
            const double rhs =
                coprimeness_at(p.reversed(m), q.reversed(n), m, n, s, SpherePoint(Complex(1.0) / z));
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }
}

TEST_CASE("power family over the full plane reaches 3^-m") {
    for (int m = 1; m <= 5; ++m) {
        CoprimenessResult r = coprimeness_over(kP.pow(m), kQ.pow(m), m, m, 1,
                                               Region::full_plane());
        CHECK(r.value == doctest::Approx(std::pow(3.0, -m)).epsilon(1e-6));
        REQUIRE(!r.argmin.infinite);
        CHECK(std::abs(r.argmin.value - Complex(1.0 / 3.0, 0.0)) < 1e-4);
        CHECK(r.method == "grid+refine");
        // the reported value matches the pointwise objective at the argmin
        CHECK(r.value == doctest::Approx(coprimeness_at(kP.pow(m), kQ.pow(m), m, m, 1, r.argmin))
                             .epsilon(1e-12));
    }
}

TEST_CASE("reported value matches the objective at the argmin outside the disk") {
    // pair whose full-plane minimum sits in the exterior, exercising the
    // reversed branch and the argmin back-mapping
    Polynomial p({Complex(1.0), Complex(0.1)});   // root at -10
    Polynomial q({Complex(2.0), Complex(-0.2)});  // root at 10
    CoprimenessResult r = coprimeness_over(p, q, 1, 1, 1, Region::full_plane());
    CHECK(std::abs(r.argmin.value) > 1.0);
    CHECK(r.value ==
          doctest::Approx(coprimeness_at(p, q, 1, 1, 1, r.argmin)).epsilon(1e-12));
}

TEST_CASE("common root pins the region minimum near zero") {
    // p = z(z-1), q = (z-1)/2: common root at 1
    Polynomial p = kP * Polynomial({Complex(-1.0), Complex(1.0)});
    CoprimenessResult r = coprimeness_over(p, kQ, 2, 1, 2, Region::unit_disk());
    CHECK(r.value <= 1e-12);
    CHECK(std::abs(r.argmin.value - Complex(1.0, 0.0)) < 1e-6);
}

TEST_CASE("point set regions are evaluated exactly") {
    Region pts = Region::point_set({SpherePoint(Complex(0.0))});
    CoprimenessResult r = coprimeness_over(kP, kQ, 1, 1, 2, pts);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.method == "finite-exact");
}

TEST_CASE("sylvester lower bounds") {
    // s=1: 1/|S0^-1|_1 = 1/3 and the full-plane value matches, so it is tight
    const double bound1 = coprimeness_lower_bound(kP, kQ, 1, 1, 0, 1);
    CHECK(bound1 == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CoprimenessResult full = coprimeness_over(kP, kQ, 1, 1, 1, Region::full_plane());
    CHECK(full.value == doctest::Approx(bound1).epsilon(1e-9));

    // bounds across shifts stay within the provable factor of each other
    std::mt19937_64 g(223);
    int done = 0;
    while (done < 30) {
        const int m = 1 + int(g() % 5), n = 1 + int(g() % 5);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        double b0, b3;
        try {
            b0 = coprimeness_lower_bound(p, q, m, n, 0, 2);
            b3 = coprimeness_lower_bound(p, q, m, n, 3, 2);
        } catch (const DegeneracyError&) {
            continue;
        }
        CHECK(b3 <= b0 * (1.0 + std::sqrt(3.0)) * (1.0 + 1e-9));
        CHECK(b0 <= b3 * (1.0 + std::sqrt(3.0)) * (1.0 + 1e-9));
        ++done;
    }

    // homogeneity: scaling the pair scales the bound
    const double b = coprimeness_lower_bound(kP, kQ, 1, 1, 1, 2);
    const double bs = coprimeness_lower_bound(kP.scaled(Complex(0.0, 2.0)),
                                              kQ.scaled(Complex(0.0, 2.0)), 1, 1, 1, 2);
    CHECK(bs == doctest::Approx(2.0 * b).epsilon(1e-12));
}

TEST_CASE("computed measure dominates the sylvester bound") {
    std::mt19937_64 g(227);
    int done = 0;
    while (done < 60) {
        const int m = 1 + int(g() % 5), n = 1 + int(g() % 5);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        CoprimenessOptions opts;
        opts.density = 12;
        double b1, b2;
        try {
            b1 = coprimeness_lower_bound(p, q, m, n, 0, 1);
            b2 = coprimeness_lower_bound(p, q, m, n, 1, 2);
        } catch (const DegeneracyError&) {
            continue;
        }
        CHECK(coprimeness_over(p, q, m, n, 1, Region::full_plane(), opts).value >=
              b1 * (1.0 - 1e-9));
        CHECK(coprimeness_over(p, q, m, n, 2, Region::full_plane(), opts).value >=
              b2 * (1.0 - 1e-9));
        ++done;
    }
}

TEST_CASE("measure never exceeds the pair norm") {
    std::mt19937_64 g(229);
    for (int t = 0; t < 40; ++t) {
        const int m = 1 + int(g() % 5), n = 1 + int(g() % 5);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        CoprimenessOptions opts;
        opts.density = 8;
        for (int s : {1, 2}) {
            CoprimenessResult r = coprimeness_over(p, q, m, n, s, Region::unit_disk(), opts);
            CHECK(r.value <= PolynomialPair(p, q).norm(s) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("reversal identity for point set regions") {
    std::mt19937_64 g(233);
    for (int t = 0; t < 30; ++t) {
        const int m = 1 + int(g() % 4), n = 1 + int(g() % 4);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        std::vector<SpherePoint> pts;
        for (int k = 0; k < 5; ++k) {
            Complex z = 2.0 * cuni(g);
            if (std::abs(z) < 0.05) z = Complex(0.3, -0.4);
            pts.emplace_back(z);
        }
        Region region = Region::point_set(pts);
        Region inv = region.inverse_image();
        for (int s : {1, 2}) {
            const double a = coprimeness_over(p, q, m, n, s, region).value;
            const double b =
                coprimeness_over(p.reversed(m), q.reversed(n), m, n, s, inv).value;
            CHECK(a == doctest::Approx(b).epsilon(1e-13));
        }
    }
}

TEST_CASE("monotone in region nesting") {
    std::mt19937_64 g(239);
    for (int t = 0; t < 10; ++t) {
        const int m = 1 + int(g() % 4), n = 1 + int(g() % 4);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        CoprimenessOptions opts;
        opts.density = 16;
        CoprimenessResult inner =
            coprimeness_over(p, q, m, n, 1, Region::disk(Complex(0.0), 0.5), opts);
        // share the inner witness so both upper bounds are comparable
        CoprimenessOptions wopts = opts;
        wopts.extra_candidates.push_back(inner.argmin);
        const double outer = coprimeness_over(p, q, m, n, 1, Region::unit_disk(), wopts).value;
        CHECK(inner.value >= outer * (1.0 - 1e-9));
    }
}

TEST_CASE("power law on point sets for the max-based objective") {
    std::mt19937_64 g(241);
    for (int t = 0; t < 30; ++t) {
        Polynomial p = random_poly(g, 2), q = random_poly(g, 2);
        const Complex z = cuni(g);
        Region pts = Region::point_set({SpherePoint(z)});
        for (int k : {2, 3}) {
            const double base = coprimeness_over(p, q, 2, 2, 1, pts).value;
            const double powv = coprimeness_over(p.pow(k), q.pow(k), 2 * k, 2 * k, 1, pts).value;
            CHECK(powv == doctest::Approx(std::pow(base, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("sensitivity certificate ratios") {
    Region disk = Region::unit_disk();
    CoprimenessOptions opts;
    opts.density = 16;

    // identical pair: ratios exactly 1
    SensitivityVerdict same = sensitivity_certificate(kP, kQ, kP, kQ, 1, 1, 1, disk, opts);
    CHECK(same.eps_ratio == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(same.cond_ratio == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(same.hypothesis_a);
    CHECK(same.hypothesis_b);
    CHECK(same.a_ok);
    CHECK(same.b_ok);

    // perturbation below half the measure: ratio within [1/2, 3/2]
    Polynomial pt = kP + Polynomial({Complex(0.05), Complex(0.05)});
    Polynomial qt = kQ - Polynomial({Complex(0.05)});
    SensitivityVerdict v = sensitivity_certificate(kP, kQ, pt, qt, 1, 1, 1, disk, opts);
    CHECK(v.hypothesis_b);  // delta_1 = 0.1 < (1/3)/2... on the disk measure
    CHECK(v.b_ok);
    CHECK(v.eps_ratio >= 0.5);
    CHECK(v.eps_ratio <= 1.5);

    // randomized admissible perturbations
    std::mt19937_64 g(251);
    int done = 0;
    while (done < 25) {
        const int m = 1 + int(g() % 4), n = 1 + int(g() % 4);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        CoprimenessResult eps = coprimeness_over(p, q, m, n, 1, disk, opts);
        if (eps.value < 1e-3) continue;
        Polynomial dp = random_poly(g, m), dq = random_poly(g, n);
        const double dn = PolynomialPair(dp, dq).norm(1);
        const double scale = 0.4 * eps.value / std::max(dn, 1e-300);
        Polynomial ptr = p + dp.scaled(Complex(scale));
        Polynomial qtr = q + dq.scaled(Complex(scale));
        SensitivityVerdict sv = sensitivity_certificate(p, q, ptr, qtr, m, n, 1, disk, opts);
        CHECK(sv.hypothesis_b);
        CHECK(sv.b_ok);
        if (sv.hypothesis_a) CHECK(sv.a_ok);
        ++done;
    }
}

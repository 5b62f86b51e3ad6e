#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "rfa/doublets.hpp"

using namespace rfa;

namespace {

Complex disk_point(std::mt19937_64& g, double radius = 1.0) {
    const double r = radius * std::sqrt(double(g() >> 11) * 0x1.0p-53);
    const double th = 2.0 * 3.141592653589793 * (double(g() >> 11) * 0x1.0p-53);
    return Complex(r * std::cos(th), r * std::sin(th));
}

RationalFunction base_case() {
    return RationalFunction(Polynomial({Complex(0.0), Complex(1.0)}),
                            Polynomial({Complex(-0.5), Complex(0.5)}));
}

} // namespace

TEST_CASE("pair enumeration") {
    auto pairs = zero_pole_pairs(base_case());
    REQUIRE(pairs.size() == 1);
    CHECK(std::abs(pairs[0].zero.value) < 1e-14);
    CHECK(std::abs(pairs[0].pole.value - Complex(1.0)) < 1e-14);
    CHECK(pairs[0].chi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    REQUIRE(pairs[0].euclid.has_value());
    CHECK(*pairs[0].euclid == doctest::Approx(1.0).epsilon(1e-12));

    // squared family: 4 pairs, all the same chordal distance
    RationalFunction r2 = base_case().pow(2);
    auto p2 = zero_pole_pairs(r2);
    REQUIRE(p2.size() == 4);
    for (const auto& pr : p2)
        CHECK(pr.chi == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));

    // 1/z: the zero is at infinity
    RationalFunction rec(Polynomial({Complex(1.0)}), Polynomial({Complex(0.0), Complex(1.0)}), 1, 1);
    auto pr = zero_pole_pairs(rec);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0].zero.infinite);
    CHECK(std::abs(pr[0].pole.value) < 1e-14);
    CHECK(pr[0].chi == doctest::Approx(1.0));
    CHECK(!pr[0].euclid.has_value());
}

TEST_CASE("pair list does not depend on root enumeration order") {
    std::mt19937_64 g(501);
    std::vector<SpherePoint> zeros, poles;
    for (int k = 0; k < 4; ++k) zeros.emplace_back(disk_point(g));
    for (int k = 0; k < 3; ++k) poles.emplace_back(disk_point(g));
    auto ref = pairs_from_roots(zeros, poles);
    for (int t = 0; t < 5; ++t) {
        std::shuffle(zeros.begin(), zeros.end(), g);
        std::shuffle(poles.begin(), poles.end(), g);
        auto got = pairs_from_roots(zeros, poles);
        REQUIRE(got.size() == ref.size());
        for (size_t i = 0; i < ref.size(); ++i) {
            CHECK(got[i].chi == ref[i].chi);
            CHECK(got[i].zero == ref[i].zero);
            CHECK(got[i].pole == ref[i].pole);
        }
    }
}

TEST_CASE("near-coincident pairs are flagged degenerate, not errors") {
    auto pairs = pairs_from_roots({SpherePoint(Complex(0.5, 0.0))},
                                  {SpherePoint(Complex(0.5, 1e-13))});
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].degenerate);
}

TEST_CASE("certificates for the base case") {
    CertificateOptions opts;
    opts.density = 24;
    CertificateSet set = certificates(base_case(), Region::unit_disk(), opts);
    REQUIRE(set.certificates.size() == 1);
    const DoubletCertificate& c = set.certificates[0];

    CHECK(set.min_variant);  // roots and region inside the closed disk
    CHECK(set.eps1 == doctest::Approx(1.0 / 3.0).epsilon(1e-6));

    // coprime bound: (1/3) / (2 * min(1*1, 1*1)) = 1/6 below chi = 0.7071
    REQUIRE(c.bounds.coprime_bound_s1.has_value());
    CHECK(*c.bounds.coprime_bound_s1 == doctest::Approx(1.0 / 6.0).epsilon(1e-6));
    CHECK(*c.bounds.coprime_bound_s1 <= c.pair.chi);

    // spherical bound on the euclidean distance: 1/rho_D = 0.4 below 1
    REQUIRE(c.bounds.rho_bound.has_value());
    CHECK(*c.bounds.rho_bound == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(*c.bounds.rho_bound <= *c.pair.euclid);

    // condition bound applies (both points in the closed disk) and holds
    REQUIRE(c.bounds.cond_bound.has_value());
    CHECK(*c.bounds.cond_bound <= *c.pair.euclid);

    REQUIRE(c.bounds.nu_bound.has_value());
    CHECK(*c.bounds.nu_bound <= c.pair.chi);

    CHECK(c.roots_in_region);
    CHECK(!c.flagged);  // chi = 0.7071 over the default threshold
}

TEST_CASE("all certificate bounds dominate observed distances on random pairs") {
    std::mt19937_64 g(521);
    CertificateOptions opts;
    opts.density = 12;
    int done = 0;
    while (done < 60) {
        const int m = 1 + int(g() % 4), n = 1 + int(g() % 4);
        std::vector<Complex> zr, pr;
        for (int k = 0; k < m; ++k) zr.push_back(disk_point(g));
        for (int k = 0; k < n; ++k) pr.push_back(disk_point(g));
        // keep pairs coprime at working precision
        bool clash = false;
        for (Complex a : zr)
            for (Complex b : pr)
                if (std::abs(a - b) < 1e-6) clash = true;
        if (clash) continue;
        // an engineered near-doublet in a third of the trials
        if (done % 3 == 0 && !pr.empty() && !zr.empty()) {
            const double sep = std::pow(10.0, -3.0 - 3.0 * (double(g() >> 11) * 0x1.0p-53));
            pr[0] = zr[0] + Complex(sep, 0.0);
            if (std::abs(pr[0]) > 1.0) pr[0] = zr[0] - Complex(sep, 0.0);
        }
        RationalFunction r(Polynomial::from_roots(zr), Polynomial::from_roots(pr), m, n);
        CertificateSet set = certificates(r, Region::unit_disk(), opts);
        for (const DoubletCertificate& c : set.certificates) {
            if (c.bounds.coprime_bound_s1)
                CHECK(c.pair.chi >= *c.bounds.coprime_bound_s1 * (1.0 - 1e-9));
            if (c.bounds.coprime_bound_s2)
                CHECK(c.pair.chi >= *c.bounds.coprime_bound_s2 * (1.0 - 1e-9));
            if (c.bounds.cond_bound)
                CHECK(*c.pair.euclid >= *c.bounds.cond_bound * (1.0 - 1e-9));
            if (c.bounds.rho_bound)
                CHECK(*c.pair.euclid >= *c.bounds.rho_bound * (1.0 - 1e-9));
            if (c.bounds.nu_bound)
                CHECK(c.pair.chi >= *c.bounds.nu_bound * (1.0 - 1e-9));
        }
        ++done;
    }
}

TEST_CASE("roots outside the region still enter the certificate candidate set") {
    // a tight doublet far outside the unit disk: the coprimeness measure over
    // the disk alone is O(1) and would certify a large separation, so the
    // roots themselves must join the candidate set
    RationalFunction r(Polynomial::from_roots({Complex(3.0, 0.0)}),
                       Polynomial::from_roots({Complex(3.0001, 0.0)}), 1, 1);
    CertificateOptions opts;
    opts.density = 8;
    CertificateSet set = certificates(r, Region::unit_disk(), opts);
    REQUIRE(set.certificates.size() == 1);
    const DoubletCertificate& c = set.certificates[0];
    CHECK(!c.roots_in_region);
    // the measure collapses near the shared root
    CHECK(set.eps1 <= 1e-3);
    REQUIRE(c.bounds.coprime_bound_s1.has_value());
    CHECK(c.pair.chi >= *c.bounds.coprime_bound_s1 * (1.0 - 1e-9));
    REQUIRE(c.bounds.coprime_bound_s2.has_value());
    CHECK(c.pair.chi >= *c.bounds.coprime_bound_s2 * (1.0 - 1e-9));
    // spherical bounds are withheld: the roots violate the region hypothesis
    CHECK(!c.bounds.rho_bound.has_value());
    CHECK(!c.bounds.nu_bound.has_value());
}

TEST_CASE("detection thresholds") {
    // engineered doublet at 1e-8
    RationalFunction tight(Polynomial({Complex(-0.5), Complex(1.0)}),
                           Polynomial({Complex(-0.5 - 1e-8), Complex(1.0)}));
    CertificateOptions opts;
    opts.density = 8;
    auto flagged = detect(tight, 1e-6, Region::unit_disk(), opts);
    REQUIRE(flagged.size() == 1);
    CHECK(flagged[0].pair.chi < 1e-6);

    // comfortable separation is not flagged at 0.1
    CHECK(detect(base_case(), 0.1, Region::unit_disk(), opts).empty());
    // zero threshold flags nothing
    CHECK(detect(tight, 0.0, Region::unit_disk(), opts).empty());
}

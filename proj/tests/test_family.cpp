#include <doctest.h>

#include <cmath>

#include "rfa/family.hpp"
#include "rfa/sylvester.hpp"

using namespace rfa;

TEST_CASE("cofactors solve the unit bezout identity") {
    // m = 1: ((z-1)/2) u - z v = 1 forces u = -2, v = -1
    BezoutFamily f1 = make_bezout_family(1);
    CHECK(std::abs(f1.u.coeff(0) - Complex(-2.0)) < 1e-13);
    CHECK(std::abs(f1.v.coeff(0) - Complex(-1.0)) < 1e-13);

    // m = 2: u = 4 + 8z, v = -3 + 2z
    BezoutFamily f2 = make_bezout_family(2);
    CHECK(std::abs(f2.u.coeff(0) - Complex(4.0)) < 1e-11);
    CHECK(std::abs(f2.u.coeff(1) - Complex(8.0)) < 1e-11);
    CHECK(std::abs(f2.v.coeff(0) - Complex(-3.0)) < 1e-11);
    CHECK(std::abs(f2.v.coeff(1) - Complex(2.0)) < 1e-11);
    CHECK(f2.u_norm1 == doctest::Approx(12.0).epsilon(1e-12));

    for (int m = 1; m <= 8; ++m) {
        BezoutFamily f = make_bezout_family(m);
        Polynomial residual = f.q * f.u - f.p * f.v - Polynomial({Complex(1.0)});
        CHECK(residual.coeff_norm(2) <= 1e-10 * std::max(1.0, f.u.coeff_norm(2)));
        CHECK(f.v_norm1 <= f.u_norm1);
    }
}

TEST_CASE("perturbation sizing and the cross identity") {
    for (int m = 1; m <= 8; ++m) {
        BezoutFamily f = make_bezout_family(m);
        // 2 |(p-pt, q-qt)|_1 = 3^{-m}
        CHECK(2.0 * f.perturbation_norm1 ==
              doctest::Approx(std::pow(3.0, -m)).epsilon(1e-12));
        CHECK(f.eta > 0.0);
        // (p qt - pt q) == eta coefficientwise, against the pair-product scale
        CHECK(f.identity_residual <= 1e-10);
        // perturbed pair stays near unit size
        CHECK(f.perturbed_pair_norm1 >= 0.5);
        CHECK(f.perturbed_pair_norm1 <= 1.5);
    }
    CHECK_THROWS_AS(make_bezout_family(0), std::invalid_argument);
    CHECK_THROWS_AS(make_bezout_family(13), std::invalid_argument);
}

TEST_CASE("family pair norms are exactly one at every shift") {
    for (int m : {1, 3, 5}) {
        BezoutFamily f = make_bezout_family(m);
        CHECK(f.p.coeff_norm(1) == 1.0);
        CHECK(f.q.coeff_norm(1) == 1.0);
        for (int ell = 0; ell <= 2; ++ell)
            CHECK(SylvesterMatrix(f.p, f.q, m, m, ell).op_norm1() == 1.0);
    }
}

TEST_CASE("cofactor norm asymptotics") {
    for (int m = 6; m <= 10; ++m) {
        BezoutFamily f = make_bezout_family(m);
        const double asym =
            std::pow(2.0, 3 * m - 1) / std::sqrt(3.141592653589793 * m);
        const double ratio = f.u_norm1 / asym;
        CHECK(ratio >= 0.8);
        CHECK(ratio <= 1.25);
    }
    for (int m = 2; m <= 8; ++m) {
        BezoutFamily f = make_bezout_family(m);
        SylvesterMatrix s0(f.p, f.q, m, m, 0);
        const double ratio = inverse_norm1(s0) / f.u_norm1;
        CHECK(ratio >= 1.0);
        CHECK(ratio <= 2.0);
    }
}

TEST_CASE("growth study rows") {
    auto rows = growth_study(2, 6, 32);
    REQUIRE(rows.size() == 5);
    double prev = 0.0;
    for (const auto& r : rows) {
        // value distance per unit perturbation sits inside the two-sided window
        CHECK(r.chi_over_delta >= r.window_lo * (1.0 - 1e-9));
        CHECK(r.chi_over_delta <= r.window_hi * (1.0 + 1e-9));
        // chi/d dominates its floor
        CHECK(r.chi_over_d >= r.chi_d_floor * (1.0 - 1e-9));
        // the normalized ratio strictly increases
        CHECK(r.ratio_growth > prev);
        prev = r.ratio_growth;
    }
    CHECK_THROWS_AS(growth_study(0, 5, 16), std::invalid_argument);
    CHECK_THROWS_AS(growth_study(1, 11, 16), std::invalid_argument);
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "rfa/errors.hpp"
#include "rfa/sylvester.hpp"

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

TEST_CASE("construction places shifted coefficient columns") {
    SylvesterMatrix s(kP, kQ, 1, 1, 0);
    REQUIRE(s.rows() == 2);
    REQUIRE(s.cols() == 2);
    CHECK(s.entries()(0, 0) == Complex(0.0));
    CHECK(s.entries()(1, 0) == Complex(1.0));
    CHECK(s.entries()(0, 1) == Complex(-0.5));
    CHECK(s.entries()(1, 1) == Complex(0.5));

    SylvesterMatrix s1(kP, kQ, 1, 1, 1);
    REQUIRE(s1.rows() == 3);
    REQUIRE(s1.cols() == 4);
    // p columns shifted by 0, 1
    CHECK(s1.entries()(0, 0) == Complex(0.0));
    CHECK(s1.entries()(1, 0) == Complex(1.0));
    CHECK(s1.entries()(2, 0) == Complex(0.0));
    CHECK(s1.entries()(1, 1) == Complex(0.0));
    CHECK(s1.entries()(2, 1) == Complex(1.0));
    // q columns shifted by 0, 1
    CHECK(s1.entries()(0, 2) == Complex(-0.5));
    CHECK(s1.entries()(1, 2) == Complex(0.5));
    CHECK(s1.entries()(1, 3) == Complex(-0.5));
    CHECK(s1.entries()(2, 3) == Complex(0.5));

    SylvesterMatrix tiny(Polynomial({Complex(1.0)}), Polynomial({Complex(1.0)}), 0, 0, 1);
    REQUIRE(tiny.rows() == 1);
    REQUIRE(tiny.cols() == 2);
    CHECK(tiny.entries()(0, 0) == Complex(1.0));
    CHECK(tiny.entries()(0, 1) == Complex(1.0));
}

TEST_CASE("row identity residual vanishes") {
    SylvesterMatrix s0(kP, kQ, 1, 1, 2);
    CHECK(row_identity_residual(s0, kP, kQ, Complex(0.0)) <= 1e-15);
    CHECK(row_identity_residual(s0, kP, kQ, Complex(0.7, 0.1)) <= 1e-13);

    std::mt19937_64 g(101);
    Polynomial p = random_poly(g, 5), q = random_poly(g, 5);
    SylvesterMatrix s(p, q, 5, 5, 3);
    for (int t = 0; t < 100; ++t) {
        Complex z = cuni(g);
        CHECK(row_identity_residual(s, p, q, z) <= 1e-12 * std::max(1.0, p.coeff_norm(1)));
    }
}

TEST_CASE("singular values of closed-form matrices") {
    SylvesterMatrix ones(Polynomial({Complex(1.0)}), Polynomial({Complex(1.0)}), 0, 0, 1);
    REQUIRE(ones.singular_values().size() == 1);
    CHECK(ones.singular_values()(0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ones.pinv_norm2() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));

    // closed-form 2x2 svd oracle for [[0,-0.5],[1,0.5]]:
    // sigma^2 are the eigenvalues of A^* A, the roots of s^4 - 1.5 s^2 + 0.25
    SylvesterMatrix s(kP, kQ, 1, 1, 0);
    const double t = std::sqrt(1.5 * 1.5 - 4.0 * 0.25);
    const double smax = std::sqrt((1.5 + t) / 2.0);
    const double smin = std::sqrt((1.5 - t) / 2.0);
    CHECK(s.singular_values()(0) == doctest::Approx(smax).epsilon(1e-13));
    CHECK(s.singular_values()(1) == doctest::Approx(smin).epsilon(1e-13));

    // constants give two disjoint identity blocks: every singular value is
    // the row modulus sqrt(|a|^2 + |b|^2)
    SylvesterMatrix diag(Polynomial({Complex(0.0, 3.0)}), Polynomial({Complex(4.0)}), 0, 0, 3);
    REQUIRE(diag.singular_values().size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(diag.singular_values()(i) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("operator norms and the inverse 1-norm") {
    SylvesterMatrix s(kP, kQ, 1, 1, 0);
    CHECK(s.op_norm1() == doctest::Approx(1.0).epsilon(1e-15));
    // inverse is [[1,1],[-2,0]]; max column abs sum = 3
    CHECK(inverse_norm1(s) == doctest::Approx(3.0).epsilon(1e-13));

    // the 1-norm never depends on the shift count
    std::mt19937_64 g(131);
    for (int t = 0; t < 30; ++t) {
        const int m = 1 + int(g() % 6), n = 1 + int(g() % 6);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        const double expected = std::max(p.coeff_norm(1), q.coeff_norm(1));
        for (int ell = 0; ell <= 4; ++ell) {
            SylvesterMatrix sl(p, q, m, n, ell);
            CHECK(sl.op_norm1() == doctest::Approx(expected).epsilon(1e-14));
        }
    }
}

TEST_CASE("every column 1-norm equals a coefficient norm exactly") {
    std::mt19937_64 g(137);
    Polynomial p = random_poly(g, 4), q = random_poly(g, 3);
    SylvesterMatrix s(p, q, 4, 3, 2);
    const double pn = p.coeff_norm(1), qn = q.coeff_norm(1);
    for (int j = 0; j < s.cols(); ++j) {
        const double cn = s.entries().col(j).cwiseAbs().sum();
        const bool is_p_col = j < s.n() + s.ell();
        CHECK(cn == (is_p_col ? pn : qn));
    }
}

TEST_CASE("pseudo-inverse norm shift bound") {
    // identity at ell = 0
    PinvNormSandwich at0 = pinv_norm_sandwich(kP, kQ, 1, 1, 0);
    CHECK(at0.lhs == at0.mid);
    CHECK(at0.mid == at0.rhs);
    CHECK(at0.ok);

    // The upper inequality |S(ell)^+|_2 <= (1+sqrt(ell)) |S(0)^-1|_2 is the
    // provable half.  The lower half (factor 1) is false: on this very pair
    // the pseudo-inverse norm drops from ~2.28825 at shift 0 to ~2.23813 at
    // shift 1, so ok stays false.  Pin both facts.
    PinvNormSandwich sw1 = pinv_norm_sandwich(kP, kQ, 1, 1, 1);
    CHECK(sw1.lhs == doctest::Approx(2.2882456112707379).epsilon(1e-12));
    CHECK(sw1.mid == doctest::Approx(2.2381284772945120).epsilon(1e-12));
    CHECK(sw1.mid < sw1.lhs);
    CHECK(!sw1.ok);
    for (int ell = 1; ell <= 4; ++ell) {
        PinvNormSandwich sw = pinv_norm_sandwich(kP, kQ, 1, 1, ell);
        CHECK(sw.mid <= sw.rhs * (1.0 + 1e-9));
    }

    std::mt19937_64 g(139);
    int done = 0;
    while (done < 60) {
        const int m = 1 + int(g() % 8), n = 1 + int(g() % 8);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        SylvesterMatrix s0(p, q, m, n, 0);
        if (!s0.full_row_rank() || s0.cond2() > 1e6) continue;
        for (int ell = 0; ell <= 4; ++ell) {
            PinvNormSandwich sw = pinv_norm_sandwich(p, q, m, n, ell);
            CHECK(sw.mid <= sw.rhs * (1.0 + 1e-9));
        }
        ++done;
    }
}

TEST_CASE("desk-scale construction stays consistent") {
    std::mt19937_64 g(157);
    Polynomial p = random_poly(g, 50), q = random_poly(g, 48);
    SylvesterMatrix s(p, q, 50, 48, 4);
    REQUIRE(s.rows() == 102);
    REQUIRE(s.cols() == 106);
    CHECK(s.op_norm1() == doctest::Approx(std::max(p.coeff_norm(1), q.coeff_norm(1))));
    const double scale = std::max(1.0, p.coeff_norm(1));
    for (int t = 0; t < 5; ++t)
        CHECK(row_identity_residual(s, p, q, 0.9 * cuni(g)) <= 1e-11 * scale);
}

TEST_CASE("rank detection separates coprime from shared-root pairs") {
    std::mt19937_64 g(149);
    // p = q gives sigma_min ~ 0
    Polynomial p = random_poly(g, 3);
    SylvesterMatrix same(p, p, 3, 3, 0);
    CHECK(same.sigma_min() <= 1e-12 * same.sigma_max());
    CHECK(!same.full_row_rank());
    CHECK_THROWS_AS(same.pinv_norm2(), DegeneracyError);

    // exactly coprime small example: p = z, q = z - 1
    SylvesterMatrix cop(Polynomial({Complex(0.0), Complex(1.0)}),
                        Polynomial({Complex(-1.0), Complex(1.0)}), 1, 1, 0);
    CHECK(cop.full_row_rank());
    CHECK(cop.sigma_min() > 0.1);
}

TEST_CASE("cond2 is scale invariant") {
    std::mt19937_64 g(151);
    for (int t = 0; t < 20; ++t) {
        const int m = 1 + int(g() % 5), n = 1 + int(g() % 5);
        Polynomial p = random_poly(g, m), q = random_poly(g, n);
        SylvesterMatrix s(p, q, m, n, 1);
        if (!s.full_row_rank()) continue;
        const Complex c = 2.0 * cuni(g) + Complex(0.5, 0.0);
        SylvesterMatrix sc(p.scaled(c), q.scaled(c), m, n, 1);
        CHECK(sc.cond2() == doctest::Approx(s.cond2()).epsilon(1e-12));
    }
}

#ifndef RFA_POLYNOMIAL_HPP
#define RFA_POLYNOMIAL_HPP

#include <complex>
#include <utility>
#include <vector>

namespace rfa {

using Complex = std::complex<double>;

/// Dense univariate polynomial over the complex numbers, coefficients stored
/// in ascending powers: coeffs()[j] multiplies z^j.  The coefficient vector is
/// never empty; the zero polynomial is stored as the single coefficient 0.
///
/// The nominal degree is len(coeffs)-1 and is kept separate from the effective
/// degree, which ignores trailing coefficients below a relative threshold.
/// Degree bounds matter: the coprimeness and Sylvester constructions depend on
/// the nominal bounds, not on the effective degrees.
class Polynomial {
public:
    Polynomial() : coeffs_(1, Complex(0.0, 0.0)) {}
    explicit Polynomial(std::vector<Complex> coeffs);
    Polynomial(std::initializer_list<Complex> coeffs)
        : Polynomial(std::vector<Complex>(coeffs)) {}

    /// Real coefficient convenience constructor.
    static Polynomial from_real(const std::vector<double>& coeffs);
    /// The monic polynomial with the given finite roots.
    static Polynomial from_roots(const std::vector<Complex>& roots);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    Complex coeff(int j) const { return j < int(coeffs_.size()) ? coeffs_[size_t(j)] : Complex(0.0); }
    int nominal_degree() const noexcept { return int(coeffs_.size()) - 1; }

    /// Largest j with |c_j| > rel_tol * max_k |c_k|; -1 for the zero polynomial.
    int effective_degree(double rel_tol = 1e-12) const;
    bool is_zero(double rel_tol = 0.0) const;
    double max_abs_coeff() const;

    /// Horner evaluation from the highest power.  For |z| > 1 the value is
    /// computed as z^d * reversed(1/z), which keeps intermediate sums bounded.
    Complex eval(Complex z) const;

    Polynomial derivative() const;

    /// z^degree_bound * p(1/z): the coefficient vector padded to length
    /// degree_bound+1 and reversed.  Requires degree_bound >= nominal_degree.
    Polynomial reversed(int degree_bound) const;
    Polynomial reversed() const { return reversed(nominal_degree()); }

    /// Coefficient norm: s=1 sum of moduli, s=2 euclidean.
    double coeff_norm(int s) const;

    Polynomial padded(int degree_bound) const;
    Polynomial trimmed(double rel_tol = 1e-12) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(Complex c) const;
    Polynomial pow(int k) const;

    bool coeffwise_equal(const Polynomial& o) const;

private:
    std::vector<Complex> coeffs_;
};

/// Finite roots plus the count of roots at infinity (nominal minus effective
/// degree).  Finite roots are companion-matrix eigenvalues after balancing.
struct RootSet {
    std::vector<Complex> finite;
    int at_infinity = 0;
};

/// Throws std::invalid_argument when the polynomial is identically zero
/// relative to rel_tol.
RootSet roots(const Polynomial& p, double rel_tol = 1e-12);

/// A (p, q) pair with its joint coefficient norms,
/// s=1: max(|p|_1, |q|_1) and s=2: sqrt(|p|_2^2 + |q|_2^2).
struct PolynomialPair {
    Polynomial p, q;

    PolynomialPair(Polynomial p_, Polynomial q_) : p(std::move(p_)), q(std::move(q_)) {}
    double norm(int s) const;
};

/// Quotient p/q with explicit degree bounds (m, n); values live on the
/// Riemann sphere.  The denominator must not be identically zero.  A nominal
/// degree excess over the effective degree encodes roots at infinity.
class RationalFunction {
public:
    RationalFunction(Polynomial p, Polynomial q);
    RationalFunction(Polynomial p, Polynomial q, int m, int n);

    const Polynomial& p() const noexcept { return p_; }
    const Polynomial& q() const noexcept { return q_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }

    /// The function w -> r(1/w), both polynomials reversed at the common
    /// bound max(m, n); exact identity r(z) = reversed()(1/z).
    RationalFunction reversed() const;

    /// r^k as the pair (p^k, q^k) with bounds (k*m, k*n).
    RationalFunction pow(int k) const;

private:
    Polynomial p_, q_;
    int m_, n_;
};

/// Residue p(z0)/q'(z0) of a simple pole z0 of r.  Throws
/// std::invalid_argument when q(z0) is not small (not a pole) and
/// std::domain_error when q'(z0) vanishes to tolerance (pole not simple).
Complex residue_at_simple_pole(const RationalFunction& r, Complex z0,
                               double pole_tol = 1e-8, double simple_tol = 1e-12);

/// Solution of p*u + q*v = target with deg u <= n-1, deg v <= m-1, via the
/// square Sylvester system.  The residual |coeffs(p*u + q*v - target)|_2 is
/// returned alongside.  Throws DegeneracyError when the system is singular to
/// working precision (p/q degenerate).
struct DiophantineSolution {
    Polynomial u, v;
    double residual = 0.0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
};

DiophantineSolution diophantine_solve(const Polynomial& p, const Polynomial& q,
                                      int m, int n, const Polynomial& target,
                                      double degeneracy_tol = 1e-14);

} // namespace rfa

#endif

#include "rfa/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "rfa/errors.hpp"

namespace rfa {

namespace {

bool finite_complex(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

// Parlett-Reinsch balancing with radix-2 scaling; similarity transform, so
// eigenvalues are unchanged while the eigensolve becomes better conditioned.
void balance_in_place(Eigen::MatrixXcd& a) {
    const int n = int(a.rows());
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                r += std::abs(a(i, j));
                c += std::abs(a(j, i));
            }
            if (r == 0.0 || c == 0.0) continue;
            double f = 1.0;
            const double s = r + c;
            while (c < r / 2.0) {
                c *= 2.0;
                r /= 2.0;
                f *= 2.0;
            }
            while (c >= r * 2.0) {
                c /= 2.0;
                r *= 2.0;
                f /= 2.0;
            }
            if ((r + c) < 0.95 * s) {
                converged = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

} // namespace

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    for (Complex c : coeffs_) {
        if (!finite_complex(c)) throw std::invalid_argument("polynomial coefficients must be finite");
    }
}

Polynomial Polynomial::from_real(const std::vector<double>& coeffs) {
    std::vector<Complex> c(coeffs.size());
    std::transform(coeffs.begin(), coeffs.end(), c.begin(), [](double x) { return Complex(x, 0.0); });
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const std::vector<Complex>& roots) {
    Polynomial p({Complex(1.0)});
    for (Complex r : roots) p = p * Polynomial({-r, Complex(1.0)});
    return p;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (Complex c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

int Polynomial::effective_degree(double rel_tol) const {
    const double floor = rel_tol * max_abs_coeff();
    for (int j = nominal_degree(); j >= 0; --j) {
        if (std::abs(coeffs_[size_t(j)]) > floor) return j;
    }
    return -1;
}

bool Polynomial::is_zero(double rel_tol) const { return effective_degree(rel_tol) < 0; }

Complex Polynomial::eval(Complex z) const {
    const double az = std::abs(z);
    if (az > 1.0) {
        // p(z) = z^d * reversed(1/z); |1/z| < 1 keeps the Horner sums bounded.
        const Complex w = Complex(1.0, 0.0) / z;
        Complex acc(0.0, 0.0);
        for (size_t j = 0; j < coeffs_.size(); ++j) acc = acc * w + coeffs_[j];
        Complex zd(1.0, 0.0);
        for (int k = 0; k < nominal_degree(); ++k) zd *= z;
        return acc * zd;
    }
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() == 1) return Polynomial({Complex(0.0)});
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = double(j) * coeffs_[j];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::reversed(int degree_bound) const {
    if (degree_bound < nominal_degree())
        throw std::invalid_argument("reversal bound below nominal degree");
    std::vector<Complex> r(size_t(degree_bound) + 1, Complex(0.0));
    for (size_t j = 0; j < coeffs_.size(); ++j) r[size_t(degree_bound) - j] = coeffs_[j];
    return Polynomial(std::move(r));
}

double Polynomial::coeff_norm(int s) const {
    if (s == 1) {
        double acc = 0.0;
        for (Complex c : coeffs_) acc += std::abs(c);
        return acc;
    }
    if (s == 2) {
        double acc = 0.0;
        for (Complex c : coeffs_) acc += std::norm(c);
        return std::sqrt(acc);
    }
    throw std::invalid_argument("coefficient norm index must be 1 or 2");
}

Polynomial Polynomial::padded(int degree_bound) const {
    if (degree_bound < nominal_degree())
        throw std::invalid_argument("padding bound below nominal degree");
    std::vector<Complex> c = coeffs_;
    c.resize(size_t(degree_bound) + 1, Complex(0.0));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::trimmed(double rel_tol) const {
    const int deff = effective_degree(rel_tol);
    if (deff < 0) return Polynomial();
    std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + deff + 1);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Complex> c(std::max(coeffs_.size(), o.coeffs_.size()), Complex(0.0));
    for (size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[j] += o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    std::vector<Complex> c(std::max(coeffs_.size(), o.coeffs_.size()), Complex(0.0));
    for (size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[j] -= o.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    std::vector<Complex> c(coeffs_.size() + o.coeffs_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(Complex c) const {
    std::vector<Complex> out = coeffs_;
    for (Complex& x : out) x *= c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("polynomial power must be nonnegative");
    Polynomial acc({Complex(1.0)});
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

bool Polynomial::coeffwise_equal(const Polynomial& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t j = 0; j < coeffs_.size(); ++j)
        if (coeffs_[j] != o.coeffs_[j]) return false;
    return true;
}

RootSet roots(const Polynomial& p, double rel_tol) {
    const int deff = p.effective_degree(rel_tol);
    if (deff < 0) throw std::invalid_argument("root finding on the zero polynomial");

    RootSet out;
    out.at_infinity = p.nominal_degree() - deff;
    if (deff == 0) return out;

    const Complex lead = p.coeff(deff);
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deff, deff);
    for (int i = 1; i < deff; ++i) companion(i, i - 1) = Complex(1.0);
    for (int i = 0; i < deff; ++i) companion(i, deff - 1) = -p.coeff(i) / lead;

    balance_in_place(companion);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success) throw std::runtime_error("companion eigensolve failed");

    out.finite.assign(es.eigenvalues().data(), es.eigenvalues().data() + deff);
    std::sort(out.finite.begin(), out.finite.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

double PolynomialPair::norm(int s) const {
    if (s == 1) return std::max(p.coeff_norm(1), q.coeff_norm(1));
    if (s == 2) return std::hypot(p.coeff_norm(2), q.coeff_norm(2));
    throw std::invalid_argument("pair norm index must be 1 or 2");
}

RationalFunction::RationalFunction(Polynomial p, Polynomial q)
    : p_(std::move(p)), q_(std::move(q)), m_(p_.nominal_degree()), n_(q_.nominal_degree()) {
    bool q_nonzero = false;
    for (Complex c : q_.coeffs())
        if (std::abs(c) > 0.0) q_nonzero = true;
    if (!q_nonzero) throw std::invalid_argument("denominator is identically zero");
}

RationalFunction::RationalFunction(Polynomial p, Polynomial q, int m, int n)
    : p_(std::move(p)), q_(std::move(q)), m_(m), n_(n) {
    bool q_nonzero = false;
    for (Complex c : q_.coeffs())
        if (std::abs(c) > 0.0) q_nonzero = true;
    if (!q_nonzero) throw std::invalid_argument("denominator is identically zero");
    if (p_.nominal_degree() > m_ || q_.nominal_degree() > n_)
        throw std::invalid_argument("degree bounds below nominal degrees");
    p_ = p_.padded(m_);
    q_ = q_.padded(n_);
}

RationalFunction RationalFunction::reversed() const {
    const int d = std::max(m_, n_);
    return RationalFunction(p_.reversed(d), q_.reversed(d), d, d);
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 1) throw std::invalid_argument("rational power must be positive");
    return RationalFunction(p_.pow(k), q_.pow(k), k * m_, k * n_);
}

Complex residue_at_simple_pole(const RationalFunction& r, Complex z0,
                               double pole_tol, double simple_tol) {
    const Polynomial& q = r.q();
    const double qscale = q.coeff_norm(2) * std::pow(std::max(1.0, std::abs(z0)), q.nominal_degree());
    if (std::abs(q.eval(z0)) > pole_tol * std::max(qscale, 1e-300))
        throw std::invalid_argument("point is not a pole of the denominator");

    const Polynomial dq = q.derivative();
    const Complex dqv = dq.eval(z0);
    const double dqscale =
        dq.coeff_norm(2) * std::pow(std::max(1.0, std::abs(z0)), std::max(0, dq.nominal_degree()));
    if (std::abs(dqv) <= simple_tol * std::max(dqscale, 1e-300))
        throw std::domain_error("pole not simple: q' vanishes at the point");
    return r.p().eval(z0) / dqv;
}

DiophantineSolution diophantine_solve(const Polynomial& p, const Polynomial& q,
                                      int m, int n, const Polynomial& target,
                                      double degeneracy_tol) {
    if (p.nominal_degree() > m || q.nominal_degree() > n)
        throw std::invalid_argument("degree bounds below nominal degrees");
    if (m + n < 1) throw std::invalid_argument("diophantine solve needs m + n >= 1");
    if (target.nominal_degree() > m + n - 1 && target.effective_degree(0.0) > m + n - 1)
        throw std::invalid_argument("target degree exceeds m + n - 1");

    const int dim = m + n;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
    // first n columns: down-shifted copies of p; last m columns: of q
    for (int j = 0; j < n; ++j)
        for (int i = 0; i <= m; ++i)
            if (i + j < dim) s(i + j, j) = p.coeff(i);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i <= n; ++i)
            if (i + j < dim) s(i + j, n + j) = q.coeff(i);

    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(dim);
    for (int i = 0; i < dim; ++i) rhs(i) = target.coeff(i);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(dim - 1);
    if (smax <= 0.0 || smin <= degeneracy_tol * smax)
        throw DegeneracyError("square Sylvester system singular to working precision", smin, smax);

    Eigen::VectorXcd w = svd.solve(rhs);

    DiophantineSolution sol{
        Polynomial({Complex(0.0)}),
        Polynomial({Complex(0.0)}),
        (s * w - rhs).norm(),
        smin,
        smax,
    };
    if (n > 0) {
        std::vector<Complex> uc(w.data(), w.data() + n);
        sol.u = Polynomial(std::move(uc));
    }
    if (m > 0) {
        std::vector<Complex> vc(w.data() + n, w.data() + dim);
        sol.v = Polynomial(std::move(vc));
    }
    return sol;
}

} // namespace rfa

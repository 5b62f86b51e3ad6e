#ifndef RFA_SYLVESTER_HPP
#define RFA_SYLVESTER_HPP

#include <Eigen/Dense>

#include "rfa/polynomial.hpp"

namespace rfa {

/// The (m+n+ell) x (m+n+2*ell) matrix whose first n+ell columns are the
/// down-shifted coefficient columns of p (padded to degree m) and whose last
/// m+ell columns are the shifted columns of q (padded to degree n).  At
/// ell = 0 this is the transpose of the classical Sylvester matrix; it has
/// full row rank exactly when p/q is nondegenerate.
///
/// Singular values are computed once at construction (dense SVD); all reads
/// afterwards are const and safe to share across threads.
class SylvesterMatrix {
public:
    static constexpr double kRankTol = 1e-10;

    SylvesterMatrix(const Polynomial& p, const Polynomial& q, int m, int n, int ell);

    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int ell() const noexcept { return ell_; }
    int rows() const noexcept { return m_ + n_ + ell_; }
    int cols() const noexcept { return m_ + n_ + 2 * ell_; }

    /// All m+n+ell singular values, descending.
    const Eigen::VectorXd& singular_values() const noexcept { return sigma_; }
    double sigma_max() const noexcept { return sigma_(0); }
    double sigma_min() const noexcept { return sigma_(sigma_.size() - 1); }

    bool full_row_rank(double rank_tol = kRankTol) const;

    /// Largest singular value.
    double op_norm2() const noexcept { return sigma_max(); }
    /// Maximum column absolute sum; equals max(|p|_1, |q|_1) for every ell.
    double op_norm1() const;
    /// 1/sigma_min; throws DegeneracyError when rank deficient.
    double pinv_norm2(double rank_tol = kRankTol) const;
    /// sigma_max/sigma_min; throws DegeneracyError when rank deficient.
    double cond2(double rank_tol = kRankTol) const;

private:
    int m_, n_, ell_;
    Eigen::MatrixXcd entries_;
    Eigen::VectorXd sigma_;
};

/// Max-norm of (1, z, ..., z^{m+n+ell-1}) S - (p(z), z p(z), ..., q(z), ...),
/// a construction self-test; zero in exact arithmetic.
double row_identity_residual(const SylvesterMatrix& s, const Polynomial& p, const Polynomial& q,
                             Complex z);

/// Maximum column absolute sum of the inverse of the square ell = 0 matrix.
/// Throws DegeneracyError when singular to working precision.
double inverse_norm1(const SylvesterMatrix& s0, double degeneracy_tol = 1e-14);

/// The pseudo-inverse norm sandwich
///   |S(0)^-1|_2 <= |S(ell)^+|_2 <= (1+sqrt(ell)) |S(0)^-1|_2.
struct PinvNormSandwich {
    double lhs = 0.0;  // |S(0)^-1|_2
    double mid = 0.0;  // |S(ell)^+|_2
    double rhs = 0.0;  // (1+sqrt(ell)) * lhs
    bool ok = false;
};

PinvNormSandwich pinv_norm_sandwich(const Polynomial& p, const Polynomial& q, int m, int n, int ell,
                                    double slack = 1e-9);

} // namespace rfa

#endif

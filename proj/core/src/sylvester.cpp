#include "rfa/sylvester.hpp"

#include <cmath>
#include <stdexcept>

#include "rfa/errors.hpp"

namespace rfa {

SylvesterMatrix::SylvesterMatrix(const Polynomial& p, const Polynomial& q, int m, int n, int ell)
    : m_(m), n_(n), ell_(ell) {
    if (ell < 0) throw std::invalid_argument("shift count ell must be >= 0");
    if (p.nominal_degree() > m || q.nominal_degree() > n)
        throw std::invalid_argument("degree bounds below nominal degrees");
    if (m + n + ell < 1) throw std::invalid_argument("empty Sylvester matrix");

    entries_ = Eigen::MatrixXcd::Zero(rows(), cols());
    for (int j = 0; j < n + ell; ++j)
        for (int i = 0; i <= m; ++i)
            if (i + j < rows()) entries_(i + j, j) = p.coeff(i);
    for (int j = 0; j < m + ell; ++j)
        for (int i = 0; i <= n; ++i)
            if (i + j < rows()) entries_(i + j, n + ell + j) = q.coeff(i);

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(entries_);
    sigma_ = svd.singularValues();
}

bool SylvesterMatrix::full_row_rank(double rank_tol) const {
    return sigma_max() > 0.0 && sigma_min() > rank_tol * sigma_max();
}

double SylvesterMatrix::op_norm1() const {
    double best = 0.0;
    for (int j = 0; j < cols(); ++j) best = std::max(best, entries_.col(j).cwiseAbs().sum());
    return best;
}

double SylvesterMatrix::pinv_norm2(double rank_tol) const {
    if (!full_row_rank(rank_tol))
        throw DegeneracyError("Sylvester matrix rank deficient: p/q degenerate", sigma_min(),
                              sigma_max());
    return 1.0 / sigma_min();
}

double SylvesterMatrix::cond2(double rank_tol) const {
    return sigma_max() * pinv_norm2(rank_tol);
}

double row_identity_residual(const SylvesterMatrix& s, const Polynomial& p, const Polynomial& q,
                             Complex z) {
    const int rows = s.rows();
    Eigen::RowVectorXcd zrow(rows);
    Complex zp(1.0, 0.0);
    for (int i = 0; i < rows; ++i) {
        zrow(i) = zp;
        zp *= z;
    }
    const Eigen::RowVectorXcd lhs = zrow * s.entries();

    const Complex pv = p.eval(z), qv = q.eval(z);
    double resid = 0.0;
    Complex zk(1.0, 0.0);
    for (int k = 0; k < s.n() + s.ell(); ++k) {
        resid = std::max(resid, std::abs(lhs(k) - zk * pv));
        zk *= z;
    }
    zk = Complex(1.0, 0.0);
    for (int k = 0; k < s.m() + s.ell(); ++k) {
        resid = std::max(resid, std::abs(lhs(s.n() + s.ell() + k) - zk * qv));
        zk *= z;
    }
    return resid;
}

double inverse_norm1(const SylvesterMatrix& s0, double degeneracy_tol) {
    if (s0.ell() != 0) throw std::invalid_argument("inverse norm needs the square ell = 0 matrix");
    if (s0.sigma_max() <= 0.0 || s0.sigma_min() <= degeneracy_tol * s0.sigma_max())
        throw DegeneracyError("square Sylvester matrix singular to working precision",
                              s0.sigma_min(), s0.sigma_max());
    const Eigen::MatrixXcd inv = s0.entries().partialPivLu().inverse();
    double best = 0.0;
    for (int j = 0; j < inv.cols(); ++j) best = std::max(best, inv.col(j).cwiseAbs().sum());
    return best;
}

PinvNormSandwich pinv_norm_sandwich(const Polynomial& p, const Polynomial& q, int m, int n, int ell,
                                    double slack) {
    const SylvesterMatrix s0(p, q, m, n, 0);
    const SylvesterMatrix sl(p, q, m, n, ell);
    PinvNormSandwich out;
    out.lhs = s0.pinv_norm2();
    out.mid = sl.pinv_norm2();
    out.rhs = (1.0 + std::sqrt(double(ell))) * out.lhs;
    out.ok = out.lhs <= out.mid * (1.0 + slack) && out.mid <= out.rhs * (1.0 + slack);
    return out;
}

} // namespace rfa

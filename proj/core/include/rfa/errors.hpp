#ifndef RFA_ERRORS_HPP
#define RFA_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace rfa {

/// Thrown when a pair p/q is numerically degenerate: the square Sylvester
/// matrix is singular (or the rectangular one rank deficient) beyond the
/// working tolerance.  Carries the offending singular values so callers can
/// report how close to degeneracy the input is.
class DegeneracyError : public std::runtime_error {
public:
    DegeneracyError(const std::string& what, double sigma_min, double sigma_max)
        : std::runtime_error(what), sigma_min_(sigma_min), sigma_max_(sigma_max) {}

    double sigma_min() const noexcept { return sigma_min_; }
    double sigma_max() const noexcept { return sigma_max_; }

private:
    double sigma_min_;
    double sigma_max_;
};

/// Thrown when a pointwise quantity is 0/0 at the given point, e.g. the
/// spherical derivative at a common root of numerator and denominator.
class IndeterminateError : public std::runtime_error {
public:
    IndeterminateError(const std::string& what, std::complex<double> where)
        : std::runtime_error(what), where_(where) {}

    std::complex<double> where() const noexcept { return where_; }

private:
    std::complex<double> where_;
};

} // namespace rfa

#endif

#ifndef RFA_JSON_IO_HPP
#define RFA_JSON_IO_HPP

#include <string>

#include "rfa/polynomial.hpp"

namespace rfa {

/// 17-significant-digit decimal string; all numeric report fields are
/// serialized this way so reports are byte-stable across runs.
std::string dec17(double x);

/// Input schema: {"p": {"coeffs": [[re, im], ...], "degree": d},
///                "q": {...}, "m": int, "n": int}.
/// Coefficient entries may be JSON numbers or decimal strings.  "degree",
/// "m" and "n" are optional; the degree bounds default to the nominal
/// degrees.  Throws std::invalid_argument on malformed input.
struct AuditInput {
    Polynomial p{std::vector<Complex>{Complex(0.0)}};
    Polynomial q{std::vector<Complex>{Complex(1.0)}};
    int m = 0;
    int n = 0;
};

AuditInput parse_rational_input(const std::string& json_text);
AuditInput load_rational_input(const std::string& path);

std::string polynomial_to_json(const Polynomial& p);

} // namespace rfa

#endif

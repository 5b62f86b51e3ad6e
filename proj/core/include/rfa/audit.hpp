#ifndef RFA_AUDIT_HPP
#define RFA_AUDIT_HPP

#include <string>
#include <vector>

#include "rfa/json_io.hpp"

namespace rfa {

/// Full audit configuration; density can be overridden through the
/// RFA_DENSITY environment variable by the CLI.
struct AuditConfig {
    std::string region_spec = "unit-disk";
    std::vector<int> ells = {1};
    double threshold = 1e-3;
    int density = 48;
    int polish_starts = 10;
    bool perturbed_roots = false;
};

struct AuditOutcome {
    std::string report_json;
    int flagged = 0;
    bool all_verdicts_ok = true;
    /// 0: clean, 2: doublets flagged (1 is reserved for errors, raised as
    /// exceptions and mapped by the CLI)
    int exit_code = 0;
};

/// Composes every indicator into one deterministic report: per-shift
/// Sylvester data, both coprimeness measures with their certified lower
/// bounds, spherical indicators with residue checks, zero/pole pair
/// certificates, and named inequality verdicts carrying both sides.
AuditOutcome run_audit(const AuditInput& input, const AuditConfig& cfg);
AuditOutcome run_audit_file(const std::string& path, const AuditConfig& cfg);

/// Distance report between two rational functions over a region.
std::string distance_report(const AuditInput& a, const AuditInput& b,
                            const std::string& region_spec, int density = 48);

/// Bezout-perturbed power family report (order m).
std::string family_report(int m);

/// Growth table for m = 1..m_max; JSON or aligned text.
std::string growth_report(int m_max, int density = 48, bool as_table = false);

} // namespace rfa

#endif

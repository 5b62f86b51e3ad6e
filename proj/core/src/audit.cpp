#include "rfa/audit.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "rfa/coprimeness.hpp"
#include "rfa/doublets.hpp"
#include "rfa/errors.hpp"
#include "rfa/family.hpp"
#include "rfa/metrics.hpp"
#include "rfa/region.hpp"
#include "rfa/spherical.hpp"
#include "rfa/sylvester.hpp"
#include "rfa/version.hpp"

namespace rfa {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json complex_json(Complex c) { return {dec17(c.real()), dec17(c.imag())}; }

ordered_json point_json(const SpherePoint& z) {
    if (z.infinite) return "inf";
    return complex_json(z.value);
}

ordered_json polynomial_json(const Polynomial& p) {
    ordered_json j;
    j["coeffs"] = ordered_json::array();
    for (Complex c : p.coeffs()) j["coeffs"].push_back(complex_json(c));
    j["degree"] = p.nominal_degree();
    return j;
}

ordered_json verdict_json(const std::string& check, double lhs, double rhs, bool ok) {
    ordered_json v;
    v["check"] = check;
    v["lhs"] = dec17(lhs);
    v["rhs"] = dec17(rhs);
    v["ok"] = ok;
    return v;
}

ordered_json certificate_json(const DoubletCertificate& c) {
    ordered_json j;
    j["zero"] = point_json(c.pair.zero);
    j["pole"] = point_json(c.pair.pole);
    j["chi_dist"] = dec17(c.pair.chi);
    j["euclid_dist"] = c.pair.euclid ? ordered_json(dec17(*c.pair.euclid)) : ordered_json(nullptr);
    ordered_json b;
    b["cond_bound"] = c.bounds.cond_bound ? ordered_json(dec17(*c.bounds.cond_bound))
                                          : ordered_json(nullptr);
    b["coprime_bound_s1"] = c.bounds.coprime_bound_s1
                                ? ordered_json(dec17(*c.bounds.coprime_bound_s1))
                                : ordered_json(nullptr);
    b["coprime_bound_s2"] = c.bounds.coprime_bound_s2
                                ? ordered_json(dec17(*c.bounds.coprime_bound_s2))
                                : ordered_json(nullptr);
    b["spherical_rho_bound"] = c.bounds.rho_bound ? ordered_json(dec17(*c.bounds.rho_bound))
                                                  : ordered_json(nullptr);
    b["spherical_nu_bound"] = c.bounds.nu_bound ? ordered_json(dec17(*c.bounds.nu_bound))
                                                : ordered_json(nullptr);
    j["bounds"] = b;
    j["roots_in_region"] = c.roots_in_region;
    j["degenerate"] = c.pair.degenerate;
    j["flagged"] = c.flagged;
    return j;
}

} // namespace

AuditOutcome run_audit(const AuditInput& input, const AuditConfig& cfg) {
    const Region region = Region::parse(cfg.region_spec);
    const RationalFunction r(input.p, input.q, input.m, input.n);
    const int m = input.m, n = input.n;

    ordered_json report;
    report["tool"] = "rfa";
    report["version"] = kVersion;
    report["input"] = {{"p", polynomial_json(input.p)},
                       {"q", polynomial_json(input.q)},
                       {"m", m},
                       {"n", n}};
    report["config"] = {{"region", region.describe()},
                        {"ells", cfg.ells},
                        {"threshold", dec17(cfg.threshold)},
                        {"density", cfg.density},
                        {"rank_tol", dec17(SylvesterMatrix::kRankTol)},
                        {"perturbed_roots", cfg.perturbed_roots}};

    std::vector<ordered_json> verdicts;

    // per-shift Sylvester sections
    report["sylvester"] = ordered_json::array();
    bool nondegenerate = true;
    for (int ell : cfg.ells) {
        SylvesterMatrix s(input.p, input.q, m, n, ell);
        ordered_json sec;
        sec["ell"] = ell;
        sec["sigma_max"] = dec17(s.sigma_max());
        sec["sigma_min"] = dec17(s.sigma_min());
        sec["cond2"] = dec17(s.sigma_min() > 0.0 ? s.sigma_max() / s.sigma_min()
                                                 : std::numeric_limits<double>::infinity());
        sec["norm1"] = dec17(s.op_norm1());
        sec["pinv_norm2"] = dec17(s.sigma_min() > 0.0 ? 1.0 / s.sigma_min()
                                                      : std::numeric_limits<double>::infinity());
        sec["full_row_rank"] = s.full_row_rank();
        nondegenerate = nondegenerate && s.full_row_rank();
        report["sylvester"].push_back(sec);

        // structural self-test at deterministic points
        double worst = 0.0;
        const double scale = std::max(1.0, PolynomialPair(input.p, input.q).norm(1));
        for (Complex z : {Complex(0.0), Complex(0.7, 0.1), Complex(-0.31, 0.55)})
            worst = std::max(worst, row_identity_residual(s, input.p, input.q, z) / scale);
        verdicts.push_back(verdict_json("power_basis_row_identity(ell=" + std::to_string(ell) + ")",
                                        worst, 1e-12, worst <= 1e-12));

        if (ell > 0 && nondegenerate) {
            PinvNormSandwich sw = pinv_norm_sandwich(input.p, input.q, m, n, ell);
            verdicts.push_back(
                verdict_json("pinv_norm_shift_upper(ell=" + std::to_string(ell) + ")", sw.mid,
                             sw.rhs, sw.mid <= sw.rhs * (1.0 + 1e-9)));
        }
    }

    // coprimeness over Khat = region samples joined with the roots
    CertificateOptions copts;
    copts.density = cfg.density;
    copts.polish_starts = cfg.polish_starts;
    copts.flag_threshold = cfg.threshold;
    copts.perturbed_roots = cfg.perturbed_roots;
    CertificateSet certs = certificates(r, region, copts);

    report["coprimeness"] = ordered_json::array();
    for (int s : {1, 2}) {
        ordered_json sec;
        sec["s"] = s;
        sec["region"] = region.describe() + " + roots";
        sec["epsilon"] = dec17(s == 1 ? certs.eps1 : certs.eps2);
        sec["argmin"] = point_json(s == 1 ? certs.eps1_argmin : certs.eps2_argmin);
        double bound = 0.0;
        bool have_bound = false;
        if (nondegenerate) {
            bound = coprimeness_lower_bound(input.p, input.q, m, n,
                                            s == 2 ? cfg.ells.front() : 0, s);
            have_bound = true;
        }
        sec["lower_bound_sylvester"] = have_bound ? ordered_json(dec17(bound))
                                                  : ordered_json(nullptr);
        sec["grid_density"] = cfg.density;
        report["coprimeness"].push_back(sec);
        if (have_bound) {
            const double eps = s == 1 ? certs.eps1 : certs.eps2;
            verdicts.push_back(verdict_json("coprimeness_pinv_bound(s=" + std::to_string(s) + ")",
                                            bound, eps, eps >= bound * (1.0 - 1e-9)));
        }
    }

    // spherical indicators and residue checks
    SupOptions sopts;
    sopts.density = cfg.density;
    sopts.polish_starts = cfg.polish_starts;
    ordered_json sph;
    if (region.kind() == Region::Kind::FullPlane) {
        SphericalIndicators nu = nu_sup(r, region, sopts);
        sph["rho_K"] = nullptr;  // rejected over the full plane
        sph["nu_K"] = nu.nu_valid ? ordered_json(dec17(nu.nu)) : ordered_json(nullptr);
        sph["argmax_rho"] = nullptr;
        sph["argmax_nu"] = nu.nu_valid ? point_json(nu.argmax_nu) : ordered_json(nullptr);
        sph["residue_checks"] = ordered_json::array();
    } else {
        SphericalIndicators ind = spherical_indicators(r, region, sopts);
        sph["rho_K"] = ind.rho_valid ? ordered_json(dec17(ind.rho)) : ordered_json(nullptr);
        sph["nu_K"] = ind.nu_valid ? ordered_json(dec17(ind.nu)) : ordered_json(nullptr);
        sph["argmax_rho"] = ind.rho_valid ? point_json(ind.argmax_rho) : ordered_json(nullptr);
        sph["argmax_nu"] = ind.nu_valid ? point_json(ind.argmax_nu) : ordered_json(nullptr);
        sph["residue_checks"] = ordered_json::array();
        bool residues_ok = true;
        bool any_simple = false;
        double worst_ratio = std::numeric_limits<double>::infinity();
        for (const ResidueCheck& c : residue_bound_check(r, region, sopts)) {
            ordered_json rc;
            rc["pole"] = complex_json(c.pole);
            rc["residue"] = c.simple ? complex_json(c.residue) : ordered_json(nullptr);
            rc["bound"] = c.simple ? ordered_json(dec17(c.bound)) : ordered_json(nullptr);
            rc["simple"] = c.simple;
            rc["ok"] = c.ok;
            sph["residue_checks"].push_back(rc);
            if (c.simple) {
                any_simple = true;
                residues_ok = residues_ok && c.ok;
                if (c.bound > 0.0)
                    worst_ratio = std::min(worst_ratio, std::abs(c.residue) / c.bound);
            }
        }
        if (any_simple)
            verdicts.push_back(verdict_json("residue_floor(min |residue|/bound)",
                                            std::isfinite(worst_ratio) ? worst_ratio : 1.0,
                                            1.0 - 1e-9, residues_ok));
    }
    report["spherical"] = sph;

    // zero/pole pair certificates
    ordered_json dj;
    dj["threshold"] = dec17(cfg.threshold);
    dj["min_variant"] = certs.min_variant;
    dj["borderline_disk"] = certs.borderline_disk;
    dj["nondegenerate"] = certs.nondegenerate;
    dj["cond2_shift1"] = certs.nondegenerate ? ordered_json(dec17(certs.cond2_s1))
                                             : ordered_json(nullptr);
    dj["pairs"] = ordered_json::array();
    int flagged = 0;
    bool pair_bounds_ok = true;
    for (const DoubletCertificate& c : certs.certificates) {
        dj["pairs"].push_back(certificate_json(c));
        if (c.flagged) ++flagged;
        auto dominated = [&](const std::optional<double>& bound, double dist) {
            if (bound) pair_bounds_ok = pair_bounds_ok && dist >= *bound * (1.0 - 1e-9);
        };
        dominated(c.bounds.coprime_bound_s1, c.pair.chi);
        dominated(c.bounds.coprime_bound_s2, c.pair.chi);
        dominated(c.bounds.nu_bound, c.pair.chi);
        if (c.pair.euclid) {
            dominated(c.bounds.cond_bound, *c.pair.euclid);
            dominated(c.bounds.rho_bound, *c.pair.euclid);
        }
    }
    dj["flagged"] = flagged;
    report["doublets"] = dj;
    if (!certs.certificates.empty())
        verdicts.push_back(verdict_json("zero_pole_bounds_dominated", pair_bounds_ok ? 1.0 : 0.0,
                                        1.0, pair_bounds_ok));

    report["verdicts"] = ordered_json::array();
    bool all_ok = true;
    for (const auto& v : verdicts) {
        report["verdicts"].push_back(v);
        all_ok = all_ok && v["ok"].get<bool>();
    }

    AuditOutcome out;
    out.flagged = flagged;
    out.all_verdicts_ok = all_ok;
    out.exit_code = flagged > 0 ? 2 : 0;
    out.report_json = report.dump(2) + "\n";
    return out;
}

AuditOutcome run_audit_file(const std::string& path, const AuditConfig& cfg) {
    return run_audit(load_rational_input(path), cfg);
}

std::string distance_report(const AuditInput& a, const AuditInput& b,
                            const std::string& region_spec, int density) {
    const Region region = Region::parse(region_spec);
    const RationalFunction r(a.p, a.q, a.m, a.n);
    const RationalFunction rt(b.p, b.q, b.m, b.n);
    ChiOptions opts;
    opts.density = density;
    DistanceVerdict v = distance_comparison(r, rt, region, opts);

    ordered_json j;
    j["tool"] = "rfa";
    j["version"] = kVersion;
    j["region"] = v.region;
    j["chi_K"] = dec17(v.chi_K);
    j["d"] = dec17(v.d);
    j["eps1_K"] = dec17(v.eps1_K);
    j["delta_norm1"] = dec17(v.delta_norm1);
    j["bounds"] = {{"coprimeness_product_lhs", dec17(v.lhs)},
                   {"coprimeness_product_rhs", dec17(v.rhs)},
                   {"coprimeness_product_ok", v.coprimeness_bound_ok},
                   {"cond_sandwich_applicable", v.sandwich_applicable},
                   {"cond2_shift1", dec17(v.cond2_s1)},
                   {"cond_sandwich_lower", dec17(v.sandwich_lower)},
                   {"cond_sandwich_upper", dec17(v.sandwich_upper)},
                   {"cond_sandwich_ok", v.sandwich_ok}};
    return j.dump(2) + "\n";
}

std::string family_report(int m) {
    BezoutFamily f = make_bezout_family(m);
    ordered_json j;
    j["tool"] = "rfa";
    j["version"] = kVersion;
    j["m"] = m;
    j["p"] = ordered_json::parse(polynomial_to_json(f.p));
    j["q"] = ordered_json::parse(polynomial_to_json(f.q));
    j["u"] = ordered_json::parse(polynomial_to_json(f.u));
    j["v"] = ordered_json::parse(polynomial_to_json(f.v));
    j["p_perturbed"] = ordered_json::parse(polynomial_to_json(f.pt));
    j["q_perturbed"] = ordered_json::parse(polynomial_to_json(f.qt));
    j["eta"] = dec17(f.eta);
    j["u_norm1"] = dec17(f.u_norm1);
    j["v_norm1"] = dec17(f.v_norm1);
    j["perturbation_norm1"] = dec17(f.perturbation_norm1);
    j["perturbed_pair_norm1"] = dec17(f.perturbed_pair_norm1);
    j["bezout_residual"] = dec17(f.bezout_residual);
    j["cross_identity_residual"] = dec17(f.identity_residual);
    j["u_norm1_asymptote_ratio"] =
        dec17(f.u_norm1 / (std::pow(2.0, 3 * m - 1) / std::sqrt(std::numbers::pi * m)));
    return j.dump(2) + "\n";
}

std::string growth_report(int m_max, int density, bool as_table) {
    auto rows = growth_study(1, m_max, density);
    if (as_table) {
        std::string out =
            "  m      chi_D/|delta|_1        window_lo        window_hi            chi/d   "
            "(chi/d)/eps\n";
        char line[200];
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%3d %16.9e %16.9e %16.9e %16.9e %13.6e\n", r.m,
                          r.chi_over_delta, r.window_lo, r.window_hi, r.chi_over_d,
                          r.ratio_growth);
            out += line;
        }
        return out;
    }
    ordered_json j;
    j["tool"] = "rfa";
    j["version"] = kVersion;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["m"] = r.m;
        row["eta"] = dec17(r.eta);
        row["eps1_disk"] = dec17(r.eps);
        row["delta_norm1"] = dec17(r.delta_norm1);
        row["chi_disk"] = dec17(r.chi_disk);
        row["chi_over_delta"] = dec17(r.chi_over_delta);
        row["window_lo"] = dec17(r.window_lo);
        row["window_hi"] = dec17(r.window_hi);
        row["d"] = dec17(r.d);
        row["chi_over_d"] = dec17(r.chi_over_d);
        row["chi_over_d_floor"] = dec17(r.chi_d_floor);
        row["growth_ratio"] = dec17(r.ratio_growth);
        row["u_norm1"] = dec17(r.u_norm1);
        row["u_norm1_asymptote_ratio"] = dec17(r.u_asym_ratio);
        row["sylvester_inverse_norm_ratio"] = dec17(r.sylv_inv_ratio);
        j["rows"].push_back(row);
    }
    return j.dump(2) + "\n";
}

} // namespace rfa

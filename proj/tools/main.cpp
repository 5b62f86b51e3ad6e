// rfa: audits rational functions p/q for Froissart doublets and
// near-degeneracy through Sylvester condition numbers, numerical
// coprimeness measures and spherical-derivative indicators.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfa/audit.hpp"
#include "rfa/errors.hpp"
#include "rfa/verify.hpp"
#include "rfa/version.hpp"

namespace {

int env_density(int fallback) {
    if (const char* s = std::getenv("RFA_DENSITY")) {
        try {
            const int d = std::stoi(s);
            if (d >= 1) return d;
        } catch (const std::exception&) {
        }
        std::cerr << "rfa: ignoring invalid RFA_DENSITY value\n";
    }
    return fallback;
}

void print_audit_table(const std::string& report_json) {
    const nlohmann::json j = nlohmann::json::parse(report_json);
    std::cout << "rfa audit  region=" << j["config"]["region"].get<std::string>() << "\n";
    for (const auto& s : j["sylvester"])
        std::cout << "  sylvester ell=" << s["ell"] << "  cond2=" << s["cond2"].get<std::string>()
                  << "  norm1=" << s["norm1"].get<std::string>()
                  << "  full_row_rank=" << (s["full_row_rank"].get<bool>() ? "yes" : "no") << "\n";
    for (const auto& c : j["coprimeness"])
        std::cout << "  coprimeness s=" << c["s"] << "  epsilon=" << c["epsilon"].get<std::string>()
                  << "  lower_bound="
                  << (c["lower_bound_sylvester"].is_null()
                          ? std::string("n/a")
                          : c["lower_bound_sylvester"].get<std::string>())
                  << "\n";
    const auto& sph = j["spherical"];
    std::cout << "  spherical rho_K="
              << (sph["rho_K"].is_null() ? std::string("n/a") : sph["rho_K"].get<std::string>())
              << "  nu_K="
              << (sph["nu_K"].is_null() ? std::string("n/a") : sph["nu_K"].get<std::string>())
              << "\n";
    std::cout << "  pairs=" << j["doublets"]["pairs"].size()
              << "  flagged=" << j["doublets"]["flagged"] << "\n";
    for (const auto& v : j["verdicts"])
        std::cout << "  [" << (v["ok"].get<bool>() ? "ok" : "VIOLATED") << "] "
                  << v["check"].get<std::string>() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"audit rational functions for Froissart doublets and near-degeneracy"};
    app.set_version_flag("--version", std::string("rfa ") + rfa::kVersion);
    app.require_subcommand(1);

    std::string format = "json";

    // audit
    auto* audit = app.add_subcommand("audit", "full indicator report for one rational function");
    std::string audit_input, audit_region = "unit-disk";
    std::vector<int> audit_ells;
    double audit_threshold = 1e-3;
    bool audit_perturbed = false;
    audit->add_option("--input", audit_input, "input JSON file with p, q, m, n")->required();
    audit->add_option("--region", audit_region,
                      "disk:cx,cy,r | unit-disk | segment:ax,ay,bx,by | points:file.json | plane");
    audit->add_option("--ell", audit_ells, "Sylvester shift counts (repeatable; default 1)");
    audit->add_option("--threshold", audit_threshold, "doublet chordal-distance threshold");
    audit->add_flag("--perturbed-roots", audit_perturbed,
                    "issue the weakened certificates valid for perturbed coefficients");
    audit->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    // verify
    auto* verify = app.add_subcommand("verify", "randomized property suite over all indicators");
    uint64_t seed = 0;
    int trials = 100;
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "instances per check");

    // distance
    auto* distance = app.add_subcommand("distance", "value and coefficient distances of two inputs");
    std::string fn1, fn2, dist_region = "unit-disk";
    distance->add_option("--fn1", fn1, "first input JSON file")->required();
    distance->add_option("--fn2", fn2, "second input JSON file")->required();
    distance->add_option("--region", dist_region, "region for the value distance");

    // example
    auto* example = app.add_subcommand("example", "Bezout-perturbed power family instance");
    int family_m = 1;
    example->add_option("--m", family_m, "family order (1..12)")->required();

    // growth
    auto* growth = app.add_subcommand("growth", "distance growth table across family orders");
    int m_max = 6;
    growth->add_option("--m-max", m_max, "largest family order (<= 10)");
    growth->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*audit) {
            rfa::AuditConfig cfg;
            cfg.region_spec = audit_region;
            if (!audit_ells.empty()) cfg.ells = audit_ells;
            cfg.threshold = audit_threshold;
            cfg.density = env_density(cfg.density);
            cfg.perturbed_roots = audit_perturbed;
            rfa::AuditOutcome out = rfa::run_audit_file(audit_input, cfg);
            if (format == "table")
                print_audit_table(out.report_json);
            else
                std::cout << out.report_json;
            return out.exit_code;
        }
        if (*verify) {
            rfa::VerifyOptions opts;
            opts.density = env_density(opts.density);
            rfa::VerifySummary sum = rfa::run_verification(seed, trials, opts);
            std::cout << sum.to_text();
            return sum.all_pass() ? 0 : 1;
        }
        if (*distance) {
            std::cout << rfa::distance_report(rfa::load_rational_input(fn1),
                                              rfa::load_rational_input(fn2), dist_region,
                                              env_density(48));
            return 0;
        }
        if (*example) {
            std::cout << rfa::family_report(family_m);
            return 0;
        }
        if (*growth) {
            std::cout << rfa::growth_report(m_max, env_density(48), format == "table");
            return 0;
        }
    } catch (const rfa::DegeneracyError& e) {
        std::cerr << "rfa: degenerate input: " << e.what()
                  << " (sigma_min=" << rfa::dec17(e.sigma_min())
                  << ", sigma_max=" << rfa::dec17(e.sigma_max()) << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "rfa: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

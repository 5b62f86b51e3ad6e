#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks of the installed command-line surface: exit codes,
// region syntax, and determinism of the verification summary.  The binary
// path arrives through RFA_BIN (set by the test harness); the suite is
// skipped when it is absent.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("RFA_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/rfa_cli_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

bool have_binary() { return std::getenv("RFA_BIN") != nullptr; }

} // namespace

TEST_CASE("cli audit exit codes") {
    if (!have_binary()) return;

    const std::string clean = write_temp(
        "clean.json",
        R"({"p": {"coeffs": [[0,0],[2,0]]}, "q": {"coeffs": [[-1,0],[1,0]]}, "m": 1, "n": 1})");
    RunResult ok = run_cli("audit --input " + clean);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"tool\": \"rfa\"") != std::string::npos);

    const std::string doublet = write_temp(
        "doublet.json",
        R"({"p": {"coeffs": [[-0.5,0],[1,0]]}, "q": {"coeffs": [[-0.50000001,0],[1,0]]}})");
    CHECK(run_cli("audit --input " + doublet + " --threshold 1e-6").exit_code == 2);

    const std::string zero_q = write_temp(
        "zeroq.json", R"({"p": {"coeffs": [[1,0]]}, "q": {"coeffs": [[0,0],[0,0]]}})");
    CHECK(run_cli("audit --input " + zero_q).exit_code == 1);

    CHECK(run_cli("audit --input /nonexistent.json").exit_code == 1);
}

TEST_CASE("cli audit region and format options") {
    if (!have_binary()) return;
    const std::string clean = write_temp(
        "fmt.json",
        R"({"p": {"coeffs": [[0,0],[2,0]]}, "q": {"coeffs": [[-1,0],[1,0]]}, "m": 1, "n": 1})");
    RunResult table = run_cli("audit --input " + clean + " --region segment:0,0,1,0 --format table");
    CHECK(table.exit_code == 0);
    CHECK(table.output.find("rfa audit") != std::string::npos);
    CHECK(table.output.find("flagged=0") != std::string::npos);

    RunResult ells = run_cli("audit --input " + clean + " --ell 0 --ell 2");
    CHECK(ells.exit_code == 0);
    CHECK(ells.output.find("\"ell\": 2") != std::string::npos);
}

TEST_CASE("cli verify is deterministic across invocations") {
    if (!have_binary()) return;
    RunResult a = run_cli("verify --seed 0 --trials 5");
    RunResult b = run_cli("verify --seed 0 --trials 5");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("checks passed") != std::string::npos);

    RunResult bad = run_cli("verify --seed 0 --trials 0");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("cli distance, example and growth") {
    if (!have_binary()) return;
    const std::string a = write_temp(
        "dist_a.json",
        R"({"p": {"coeffs": [[0,0],[2,0]]}, "q": {"coeffs": [[-1,0],[1,0]]}, "m": 1, "n": 1})");
    const std::string b = write_temp(
        "dist_b.json",
        R"({"p": {"coeffs": [[0.03,0],[2,0]]}, "q": {"coeffs": [[-1,0],[1.01,0]]}, "m": 1, "n": 1})");
    RunResult dist = run_cli("distance --fn1 " + a + " --fn2 " + b + " --region unit-disk");
    CHECK(dist.exit_code == 0);
    CHECK(dist.output.find("\"chi_K\"") != std::string::npos);

    RunResult fam = run_cli("example --m 3");
    CHECK(fam.exit_code == 0);
    CHECK(fam.output.find("\"u_norm1\"") != std::string::npos);
    CHECK(run_cli("example --m 13").exit_code == 1);

    RunResult growth = run_cli("growth --m-max 3 --format table");
    CHECK(growth.exit_code == 0);
    CHECK(growth.output.find("chi_D/|delta|_1") != std::string::npos);
}

TEST_CASE("cli honors the density environment override") {
    if (!have_binary()) return;
    const std::string clean = write_temp(
        "dens.json",
        R"({"p": {"coeffs": [[0,0],[2,0]]}, "q": {"coeffs": [[-1,0],[1,0]]}, "m": 1, "n": 1})");
    RunResult r = run_cli("audit --input " + clean + " --format json");
    CHECK(r.output.find("\"density\": 48") != std::string::npos);

    const char* bin = std::getenv("RFA_BIN");
    const std::string cmd = std::string("RFA_DENSITY=12 ") + bin + " audit --input " + clean;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    CHECK(out.find("\"density\": 12") != std::string::npos);
}

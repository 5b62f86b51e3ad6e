#include "rfa/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace rfa {

std::string dec17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

namespace {

double number_or_string(const nlohmann::json& j, const char* what) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return std::stod(j.get<std::string>());
    throw std::invalid_argument(std::string(what) + " must be a number or a decimal string");
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array() ||
        j["coeffs"].empty())
        throw std::invalid_argument("polynomial needs a non-empty \"coeffs\" array");
    std::vector<Complex> coeffs;
    coeffs.reserve(j["coeffs"].size());
    for (const auto& e : j["coeffs"]) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("coefficients must be [re, im] pairs");
        coeffs.emplace_back(number_or_string(e[0], "coefficient"),
                            number_or_string(e[1], "coefficient"));
    }
    Polynomial p(std::move(coeffs));
    if (j.contains("degree") && j["degree"].get<int>() != p.nominal_degree())
        throw std::invalid_argument("declared degree disagrees with the coefficient count");
    return p;
}

} // namespace

AuditInput parse_rational_input(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON input: ") + e.what());
    }
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        throw std::invalid_argument("input needs \"p\" and \"q\" polynomials");

    AuditInput in;
    in.p = polynomial_from_json(j["p"]);
    in.q = polynomial_from_json(j["q"]);
    in.m = j.contains("m") ? j["m"].get<int>() : in.p.nominal_degree();
    in.n = j.contains("n") ? j["n"].get<int>() : in.q.nominal_degree();
    if (in.m < in.p.nominal_degree() || in.n < in.q.nominal_degree())
        throw std::invalid_argument("degree bounds m, n below the nominal degrees");
    return in;
}

AuditInput load_rational_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_rational_input(ss.str());
}

std::string polynomial_to_json(const Polynomial& p) {
    nlohmann::ordered_json j;
    j["coeffs"] = nlohmann::json::array();
    for (Complex c : p.coeffs())
        j["coeffs"].push_back({dec17(c.real()), dec17(c.imag())});
    j["degree"] = p.nominal_degree();
    return j.dump();
}

} // namespace rfa

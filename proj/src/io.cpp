#include "cspcd/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace cspcd {

std::vector<double> read_point_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file: " + path);
    std::vector<double> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) {
            try {
                std::size_t used = 0;
                const double v = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                pts.push_back(v);
            } catch (const std::exception&) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": not a number: '" + tok + "'");
            }
        }
    }
    return pts;
}

std::string kind_name(CellKind kind) {
    switch (kind) {
        case CellKind::LeftEnd: return "left_end";
        case CellKind::Middle: return "middle";
        case CellKind::RightEnd: return "right_end";
    }
    return "middle";
}

CellKind kind_from_name(const std::string& name) {
    if (name == "middle") return CellKind::Middle;
    if (name == "end" || name == "right_end") return CellKind::RightEnd;
    if (name == "left_end") return CellKind::LeftEnd;
    throw std::invalid_argument("unknown cell kind: " + name);
}

namespace {

double get_maybe_nan(const nlohmann::json& j, const char* key) {
    if (j.at(key).is_null()) return std::numeric_limits<double>::quiet_NaN();
    return j.at(key).get<double>();
}

nlohmann::json put_maybe_nan(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

} // namespace

void to_json(nlohmann::json& j, const MomentPair& m) {
    j = nlohmann::json{{"mu", m.mu}, {"four_nu", m.four_nu}};
}

void from_json(const nlohmann::json& j, MomentPair& m) {
    j.at("mu").get_to(m.mu);
    j.at("four_nu").get_to(m.four_nu);
}

void to_json(nlohmann::json& j, const MixtureMoments& m) {
    j = nlohmann::json{{"mu_tilde", m.mu_tilde},
                       {"four_nu_tilde", m.four_nu_tilde},
                       {"mu_breve", m.mu_breve},
                       {"four_nu_breve", m.four_nu_breve},
                       {"sum_w2", m.sum_w2}};
}

void from_json(const nlohmann::json& j, MixtureMoments& m) {
    j.at("mu_tilde").get_to(m.mu_tilde);
    j.at("four_nu_tilde").get_to(m.four_nu_tilde);
    j.at("mu_breve").get_to(m.mu_breve);
    j.at("four_nu_breve").get_to(m.four_nu_breve);
    j.at("sum_w2").get_to(m.sum_w2);
}

void to_json(nlohmann::json& j, const CaseProbabilities& cp) {
    j = nlohmann::json{{"p_a", cp.p_a},
                       {"p2n", cp.p2n},
                       {"png", cp.png},
                       {"p2g", cp.p2g},
                       {"kind", kind_name(cp.kind)}};
}

void from_json(const nlohmann::json& j, CaseProbabilities& cp) {
    j.at("p_a").get_to(cp.p_a);
    j.at("p2n").get_to(cp.p2n);
    j.at("png").get_to(cp.png);
    j.at("p2g").get_to(cp.p2g);
    cp.kind = kind_from_name(j.at("kind").get<std::string>());
}

void to_json(nlohmann::json& j, const MCReport& r) {
    j = nlohmann::json{{"mean", r.mean},
                       {"variance", r.variance},
                       {"densities", r.densities},
                       {"standardized", r.standardized},
                       {"ks_stat", put_maybe_nan(r.ks_stat)},
                       {"ks_pvalue", put_maybe_nan(r.ks_pvalue)},
                       {"degenerate", r.degenerate}};
}

void from_json(const nlohmann::json& j, MCReport& r) {
    j.at("mean").get_to(r.mean);
    j.at("variance").get_to(r.variance);
    j.at("densities").get_to(r.densities);
    j.at("standardized").get_to(r.standardized);
    r.ks_stat = get_maybe_nan(j, "ks_stat");
    r.ks_pvalue = get_maybe_nan(j, "ks_pvalue");
    j.at("degenerate").get_to(r.degenerate);
}

void to_json(nlohmann::json& j, const TestResult& r) {
    j = nlohmann::json{{"rho_observed", r.rho_observed},
                       {"mu_null", r.mu_null},
                       {"four_nu_null", r.four_nu_null},
                       {"z", r.z},
                       {"p_two_sided", r.p_two_sided},
                       {"p_greater", r.p_greater},
                       {"p_less", r.p_less},
                       {"n_effective", r.n_effective},
                       {"version", r.version}};
}

void from_json(const nlohmann::json& j, TestResult& r) {
    j.at("rho_observed").get_to(r.rho_observed);
    j.at("mu_null").get_to(r.mu_null);
    j.at("four_nu_null").get_to(r.four_nu_null);
    j.at("z").get_to(r.z);
    j.at("p_two_sided").get_to(r.p_two_sided);
    j.at("p_greater").get_to(r.p_greater);
    j.at("p_less").get_to(r.p_less);
    j.at("n_effective").get_to(r.n_effective);
    j.at("version").get_to(r.version);
}

void to_json(nlohmann::json& j, const OptimalParams& p) {
    j = nlohmann::json{{"tau_star", p.tau_star}, {"rate_coefficient", p.rate_coefficient}};
    j["c_star"] = p.c_star ? nlohmann::json(*p.c_star) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, OptimalParams& p) {
    j.at("tau_star").get_to(p.tau_star);
    j.at("rate_coefficient").get_to(p.rate_coefficient);
    if (j.at("c_star").is_null())
        p.c_star.reset();
    else
        p.c_star = j.at("c_star").get<double>();
}

} // namespace cspcd

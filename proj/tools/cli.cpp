#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cspcd/digraph.hpp"
#include "cspcd/geometry2d.hpp"
#include "cspcd/inference.hpp"
#include "cspcd/io.hpp"
#include "cspcd/moments.hpp"
#include "cspcd/montecarlo.hpp"
#include "cspcd/oracle.hpp"

namespace cspcd::cli {

namespace {

double parse_tau(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "Inf") return Params::infinite_tau();
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw CLI::ValidationError("--tau", "not a number: " + text);
    return v;
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> vals;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            vals.push_back(tok == "inf" ? Params::infinite_tau() : std::stod(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "not a number: " + tok);
        }
    }
    if (vals.empty()) throw CLI::ValidationError(flag, "empty list");
    return vals;
}

SupportInterval parse_support(const std::string& text) {
    const auto vals = parse_list(text, "--support");
    if (vals.size() != 2) throw CLI::ValidationError("--support", "expected lo,hi");
    return SupportInterval(vals[0], vals[1]);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

AnchorSet anchors_from(const std::string& list, const std::string& file) {
    if (!file.empty()) return AnchorSet(read_point_file(file));
    if (!list.empty()) return AnchorSet(parse_list(list, "--anchors"));
    throw CLI::ValidationError("--anchors", "anchors or an anchor file are required");
}

struct CommonMC {
    int n = 1000;
    int reps = 100;
    std::uint64_t seed = 0;
    int workers = 0;
    int version = 2;
};

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"central similarity proximity catch digraphs on one-dimensional data"};
    app.require_subcommand(1);
    std::string out_path;

    // ---- moments ----
    auto* cmd_moments = app.add_subcommand(
        "moments", "closed-form asymptotic moments (mu, 4nu), single kind or anchor mixture");
    std::string m_tau, m_kind = "middle", m_anchors, m_anchor_file, m_support;
    double m_c = 0.5;
    cmd_moments->add_option("--tau", m_tau, "expansion parameter (or 'inf')")->required();
    cmd_moments->add_option("--c", m_c, "centrality parameter in (0,1)");
    cmd_moments->add_option("--kind", m_kind, "middle|end")
        ->check(CLI::IsMember({"middle", "end"}));
    cmd_moments->add_option("--support", m_support, "support as lo,hi (mixture mode)");
    cmd_moments->add_option("--anchors", m_anchors, "comma-separated anchors (mixture mode)");
    cmd_moments->add_option("--anchor-file", m_anchor_file, "anchor point file (mixture mode)");
    cmd_moments->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_moments->callback([&] {
        const Params params{parse_tau(m_tau), m_c};
        nlohmann::json j;
        if (!m_support.empty() || !m_anchors.empty() || !m_anchor_file.empty()) {
            if (m_support.empty())
                throw CLI::ValidationError("--support", "required together with anchors");
            const auto partition =
                build_partition(parse_support(m_support), anchors_from(m_anchors, m_anchor_file),
                                true);
            j = mixture_moments(partition, params);
        } else {
            const MomentPair m = m_kind == "middle" ? middle_moments(params)
                                                    : end_moments(params.tau);
            j = m;
            if (params.tau_infinite()) j["degenerate"] = true;
        }
        emit(j.dump(2) + "\n", out_path);
    });

    // ---- oracle ----
    auto* cmd_oracle = app.add_subcommand(
        "oracle", "quadrature case probabilities and derived moments, CSV per (tau,c,kind)");
    std::string o_tau, o_c = "0.5", o_kind = "both";
    double o_tol = 1e-10;
    cmd_oracle->add_option("--tau", o_tau, "comma-separated tau values")->required();
    cmd_oracle->add_option("--c", o_c, "comma-separated c values (middle kind)");
    cmd_oracle->add_option("--kind", o_kind, "middle|end|both")
        ->check(CLI::IsMember({"middle", "end", "both"}));
    cmd_oracle->add_option("--tol", o_tol, "absolute quadrature tolerance");
    cmd_oracle->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_oracle->callback([&] {
        std::ostringstream csv;
        csv << "tau,c,kind,p_a,p2n,png,p2g,mu,four_nu\n";
        auto row = [&](const Params& p, CellKind kind) {
            const CaseProbabilities cp = case_probabilities(p, kind, o_tol);
            const MomentPair m = moments_from_probabilities(cp);
            csv << fmt(p.tau) << ',' << (kind == CellKind::Middle ? fmt(p.c) : std::string())
                << ',' << (kind == CellKind::Middle ? "middle" : "end") << ',' << fmt(cp.p_a)
                << ',' << fmt(cp.p2n) << ',' << fmt(cp.png) << ',' << fmt(cp.p2g) << ','
                << fmt(m.mu) << ',' << fmt(m.four_nu) << '\n';
        };
        for (double tau : parse_list(o_tau, "--tau")) {
            if (o_kind != "end")
                for (double c : parse_list(o_c, "--c")) row(Params{tau, c}, CellKind::Middle);
            if (o_kind != "middle") row(Params{tau, 0.5}, CellKind::RightEnd);
        }
        emit(csv.str(), out_path);
    });

    // ---- simulate ----
    auto* cmd_sim = app.add_subcommand("simulate",
                                       "Monte Carlo relative density with CLT standardization");
    std::string s_tau, s_support = "0,1", s_anchors, s_anchor_file, s_csv;
    double s_c = 0.5;
    CommonMC s_mc;
    cmd_sim->add_option("--tau", s_tau, "expansion parameter (or 'inf')")->required();
    cmd_sim->add_option("--c", s_c, "centrality parameter");
    cmd_sim->add_option("--support", s_support, "support as lo,hi");
    cmd_sim->add_option("--anchors", s_anchors, "comma-separated anchors");
    cmd_sim->add_option("--anchor-file", s_anchor_file, "anchor point file");
    cmd_sim->add_option("--n", s_mc.n, "points per replicate");
    cmd_sim->add_option("--reps", s_mc.reps, "number of replicates");
    cmd_sim->add_option("--seed", s_mc.seed, "RNG seed");
    cmd_sim->add_option("--version", s_mc.version, "density version: 1 (|A|/n_T) or 2")
        ->check(CLI::IsMember({1, 2}));
    cmd_sim->add_option("--workers", s_mc.workers, "worker threads (0: CSPCD_WORKERS or 1)");
    cmd_sim->add_option("--csv", s_csv, "also write per-replicate CSV to this path");
    cmd_sim->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_sim->callback([&] {
        MCConfig cfg;
        cfg.n = s_mc.n;
        cfg.reps = s_mc.reps;
        cfg.seed = s_mc.seed;
        cfg.workers = s_mc.workers;
        cfg.density_version = s_mc.version;
        cfg.params = Params{parse_tau(s_tau), s_c};
        cfg.partition = build_partition(parse_support(s_support),
                                        anchors_from(s_anchors, s_anchor_file), true);
        const MCReport rep = simulate_density(cfg);
        if (!s_csv.empty()) {
            std::ostringstream csv;
            csv << "replicate,density,standardized\n";
            for (std::size_t r = 0; r < rep.densities.size(); ++r) {
                csv << r << ',' << fmt(rep.densities[r]) << ','
                    << (r < rep.standardized.size() ? fmt(rep.standardized[r]) : std::string())
                    << '\n';
            }
            std::ofstream f(s_csv, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + s_csv);
            f << csv.str();
        }
        emit(nlohmann::json(rep).dump(2) + "\n", out_path);
    });

    // ---- test ----
    auto* cmd_test = app.add_subcommand("test",
                                        "spatial-pattern z-test of X points against anchors Y");
    std::string t_tau, t_support, t_xfile, t_yfile;
    double t_c = 0.5;
    int t_version = 2;
    cmd_test->add_option("--x-file", t_xfile, "X point file (one float per line)")->required();
    cmd_test->add_option("--y-file", t_yfile, "Y (anchor) point file")->required();
    cmd_test->add_option("--tau", t_tau, "expansion parameter")->required();
    cmd_test->add_option("--c", t_c, "centrality parameter");
    cmd_test->add_option("--support", t_support, "support as lo,hi")->required();
    cmd_test->add_option("--version", t_version, "density version: 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    cmd_test->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_test->callback([&] {
        const auto xs = read_point_file(t_xfile);
        auto ys = read_point_file(t_yfile);
        std::sort(ys.begin(), ys.end());
        const TestResult res = spatial_test(xs, AnchorSet(ys), parse_support(t_support),
                                            Params{parse_tau(t_tau), t_c}, t_version);
        emit(nlohmann::json(res).dump(2) + "\n", out_path);
    });

    // ---- sweep ----
    auto* cmd_sweep = app.add_subcommand(
        "sweep", "tabulate closed-form moments and rate coefficients over a (tau,c) grid");
    std::string w_tau, w_c = "0.5", w_kind = "both";
    std::int64_t w_n = 1;
    cmd_sweep->add_option("--tau", w_tau, "comma-separated tau values")->required();
    cmd_sweep->add_option("--c", w_c, "comma-separated c values");
    cmd_sweep->add_option("--kind", w_kind, "middle|end|both")
        ->check(CLI::IsMember({"middle", "end", "both"}));
    cmd_sweep->add_option("--n", w_n, "sample size entering the rate (default 1: coefficient)");
    cmd_sweep->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_sweep->callback([&] {
        std::ostringstream csv;
        csv << "tau,c,kind,mu,four_nu,rate\n";
        auto row = [&](double tau, double c, bool end) {
            const MomentPair m = end ? end_moments(tau) : middle_moments(Params{tau, c});
            csv << fmt(tau) << ',' << (end ? std::string() : fmt(c)) << ','
                << (end ? "end" : "middle") << ',' << fmt(m.mu) << ',' << fmt(m.four_nu) << ','
                << (m.four_nu > 0.0 ? fmt(convergence_rate(m, w_n)) : std::string()) << '\n';
        };
        for (double tau : parse_list(w_tau, "--tau")) {
            if (w_kind != "end")
                for (double c : parse_list(w_c, "--c")) row(tau, c, false);
            if (w_kind != "middle") row(tau, 0.5, true);
        }
        emit(csv.str(), out_path);
    });

    // ---- optimal ----
    auto* cmd_opt = app.add_subcommand(
        "optimal", "parameters minimizing the convergence-rate coefficient");
    std::string r_regime = "all";
    cmd_opt->add_option("--regime", r_regime, "middle_c_half|middle_full|end|all")
        ->check(CLI::IsMember({"middle_c_half", "middle_full", "end", "all"}));
    cmd_opt->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_opt->callback([&] {
        nlohmann::json j;
        if (r_regime == "all") {
            j["middle_c_half"] = optimal_parameters(Regime::MiddleCHalf);
            j["middle_full"] = optimal_parameters(Regime::MiddleFull);
            j["end"] = optimal_parameters(Regime::End);
        } else if (r_regime == "middle_c_half") {
            j = optimal_parameters(Regime::MiddleCHalf);
        } else if (r_regime == "middle_full") {
            j = optimal_parameters(Regime::MiddleFull);
        } else {
            j = optimal_parameters(Regime::End);
        }
        emit(j.dump(2) + "\n", out_path);
    });

    // ---- planar-sim ----
    auto* cmd_planar = app.add_subcommand(
        "planar-sim", "Monte Carlo relative density in one triangle (no closed forms in 2-D)");
    std::string p_triangle, p_tau;
    CommonMC p_mc;
    p_mc.n = 500;
    cmd_planar->add_option("--triangle", p_triangle, "vertices as x1,y1,x2,y2,x3,y3")->required();
    cmd_planar->add_option("--tau", p_tau, "expansion parameter (or 'inf')")->required();
    cmd_planar->add_option("--n", p_mc.n, "points per replicate");
    cmd_planar->add_option("--reps", p_mc.reps, "number of replicates");
    cmd_planar->add_option("--seed", p_mc.seed, "RNG seed");
    cmd_planar->add_option("--workers", p_mc.workers, "worker threads");
    cmd_planar->add_option("-o,--out", out_path, "write output to file instead of stdout");
    cmd_planar->callback([&] {
        const auto v = parse_list(p_triangle, "--triangle");
        if (v.size() != 6) throw CLI::ValidationError("--triangle", "expected six floats");
        const Triangle tri{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}};
        const MCReport rep =
            planar_density_mc(p_mc.n, p_mc.reps, parse_tau(p_tau), tri, p_mc.seed, p_mc.workers);
        emit(nlohmann::json(rep).dump(2) + "\n", out_path);
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace cspcd::cli

// Command-line front end: run registry problems from config files, emit
// convergence tables, stability-bound curves and 2D Riemann fields as CSV.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tvdlab/config.hpp"
#include "tvdlab/euler.hpp"
#include "tvdlab/registry.hpp"
#include "tvdlab/runner.hpp"
#include "tvdlab/tvd_core.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitPositivity = 3;
constexpr int kExitTvd = 4;

std::string output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TVDLAB_OUT_DIR")) return env;
    return "out";
}

void print_summary(const tvdlab::RunResult& res) {
    std::cout << "problem=" << res.config.problem
              << " scheme=" << res.config.scheme << " ccs=" << res.config.ccs
              << " n=" << res.config.n << " cfl=" << res.config.cfl
              << " t_end=" << tvdlab::format_g17(res.t_end)
              << " steps=" << res.steps
              << " tv_violations=" << res.tv_violations
              << " lmp_violations=" << res.lmp_violations << " digest=" << std::hex
              << res.digest << std::dec << "\n";
}

int cmd_run(const std::string& config_path, const std::string& out_flag,
            bool strict) {
    tvdlab::RunConfig cfg = tvdlab::load_config(config_path);
    if (strict) cfg.strict_tvd = true;
    const tvdlab::RunResult res = tvdlab::run_problem(cfg);
    print_summary(res);
    for (const auto& p : tvdlab::write_outputs(res, output_dir(out_flag)))
        std::cout << "wrote " << p << "\n";
    return 0;
}

int cmd_convergence(const std::string& config_path, const std::string& n_csv,
                    const std::string& out_flag) {
    const tvdlab::RunConfig cfg = tvdlab::load_config(config_path);
    std::vector<int> ns;
    std::stringstream ss(n_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) ns.push_back(std::stoi(tok));
    if (ns.empty()) throw tvdlab::ConfigError("convergence: empty N list");

    const auto table = tvdlab::convergence_sweep(cfg, ns);
    std::ostringstream csv;
    csv << "N,L1,L1_rate,Linf,Linf_rate\n";
    for (const auto& row : table)
        csv << row.n << "," << tvdlab::format_g17(row.l1) << ","
            << tvdlab::format_g17(row.l1_rate) << ","
            << tvdlab::format_g17(row.linf) << ","
            << tvdlab::format_g17(row.linf_rate) << "\n";
    std::cout << csv.str();

    const std::string dir = output_dir(out_flag);
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + cfg.problem + "_convergence.csv";
    std::ofstream f(path);
    f << csv.str();
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_bounds(double nu_min, double nu_max, int steps,
               const std::string& out_flag) {
    if (!(nu_min >= 0.0) || !(nu_max <= 1.0) || !(nu_min < nu_max) || steps < 2)
        throw tvdlab::ConfigError("bounds: need 0 <= nu_min < nu_max <= 1, steps >= 2");
    constexpr double kSentinel = 1e30;  // stands in for the diverging bounds
    std::ostringstream csv;
    csv << "nu,kappa1,gamma1,kappa2,gamma2\n";
    for (int i = 0; i < steps; ++i) {
        const double nu = nu_min + (nu_max - nu_min) * i / (steps - 1);
        const auto lb = tvdlab::bounds_lxw(nu);
        double k2 = -kSentinel, g2 = kSentinel;
        if (const auto bb = tvdlab::bounds_bw(nu)) {
            k2 = std::max(bb->kappa2, -kSentinel);
            g2 = std::min(bb->gamma2, kSentinel);
        }
        csv << tvdlab::format_g17(nu) << "," << tvdlab::format_g17(lb.kappa1)
            << "," << tvdlab::format_g17(lb.gamma1) << ","
            << tvdlab::format_g17(k2) << "," << tvdlab::format_g17(g2) << "\n";
    }
    std::cout << csv.str();
    const std::string dir = output_dir(out_flag);
    std::filesystem::create_directories(dir);
    std::ofstream f(dir + "/bounds.csv");
    f << csv.str();
    std::cout << "wrote " << dir << "/bounds.csv\n";
    return 0;
}

int cmd_riemann2d(int k, int nx, double t_final, const std::string& out_flag,
                  bool report_symmetry) {
    tvdlab::RunConfig cfg;
    cfg.problem = "riemann2d-" + std::to_string(k);
    cfg.nx = cfg.ny = cfg.n = nx;
    cfg.t_final = t_final;
    cfg.channels = {"solution"};
    const tvdlab::RunResult res = tvdlab::run_problem(cfg);
    print_summary(res);
    for (const auto& p : tvdlab::write_outputs(res, output_dir(out_flag)))
        std::cout << "wrote " << p << "\n";

    if (report_symmetry) {
        // Mirror check across the main diagonal: x-first vs y-first sweeps.
        const auto& ps = tvdlab::find_problem(cfg.problem);
        const auto rcfg = tvdlab::riemann_config(ps.config_k);
        auto run_variant = [&](bool x_first) {
            auto f = tvdlab::make_riemann_field(rcfg, res.config.nx,
                                                res.config.ny, res.config.gamma);
            const tvdlab::SchemeId scheme =
                tvdlab::parse_scheme(res.config.scheme, res.config.ccs);
            const tvdlab::SensorParams sensor{res.config.epsilon,
                                              res.config.delta,
                                              res.config.mr_threshold};
            double t = 0.0;
            const double tf = res.config.t_final;
            while (tf - t > 1e-12 * (1.0 + tf)) {
                double dt = tf - t;
                const double sx = f.max_speed_x(), sy = f.max_speed_y();
                if (sx > 0.0) dt = std::min(dt, res.config.cfl * f.grid.dx() / sx);
                if (sy > 0.0) dt = std::min(dt, res.config.cfl * f.grid.dy() / sy);
                tvdlab::step_euler_2d_strang(
                    f, dt, scheme, scheme.shock_corrected ? &sensor : nullptr,
                    x_first);
                t += dt;
            }
            return f;
        };
        const auto fx = run_variant(true), fy = run_variant(false);
        double resid = 0.0;
        for (int iy = 0; iy < fx.grid.ny; ++iy)
            for (int ix = 0; ix < fx.grid.nx; ++ix)
                resid = std::max(resid,
                                 std::fabs(fx.q[fx.grid.idx(ix, iy)][0] -
                                           fy.q[fy.grid.idx(iy, ix)][0]));
        std::cout << "diagonal_mirror_residual=" << tvdlab::format_g17(resid)
                  << "\n";
    }
    return 0;
}

int cmd_list() {
    for (const auto& id : tvdlab::registry_ids()) std::cout << id << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid TVD/LMP conservation-law solver laboratory"};
    app.require_subcommand(1);

    std::string config_path, out_dir_flag, n_csv = "20,40,80,160,320,640";
    bool strict = false, symmetry = false;
    double nu_min = 0.01, nu_max = 1.0, t_final = -1.0;
    int steps = 100, k = 1, nx = 100;

    auto* run = app.add_subcommand("run", "Execute a config file");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--out", out_dir_flag, "output directory");
    run->add_flag("--strict-tvd", strict, "abort (exit 4) on any TV growth");

    auto* conv = app.add_subcommand("convergence", "Refinement sweep");
    conv->add_option("config", config_path, "config file")->required();
    conv->add_option("--n-list", n_csv, "comma-separated cell counts");
    conv->add_option("--out", out_dir_flag, "output directory");

    auto* bounds = app.add_subcommand("bounds", "Stability bound curves");
    bounds->add_option("--nu-min", nu_min);
    bounds->add_option("--nu-max", nu_max);
    bounds->add_option("--steps", steps);
    bounds->add_option("--out", out_dir_flag, "output directory");

    auto* r2d = app.add_subcommand("riemann2d", "2D quadrant problem");
    r2d->add_option("k", k, "configuration 1..12")->required();
    r2d->add_option("--nx", nx, "cells per direction");
    r2d->add_option("--t", t_final, "final time override");
    r2d->add_option("--out", out_dir_flag, "output directory");
    r2d->add_flag("--symmetry", symmetry, "report diagonal mirror residual");

    auto* list = app.add_subcommand("list", "Registry problem ids");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(config_path, out_dir_flag, strict);
        if (conv->parsed()) return cmd_convergence(config_path, n_csv, out_dir_flag);
        if (bounds->parsed()) return cmd_bounds(nu_min, nu_max, steps, out_dir_flag);
        if (r2d->parsed()) return cmd_riemann2d(k, nx, t_final, out_dir_flag, symmetry);
        if (list->parsed()) return cmd_list();
    } catch (const tvdlab::TvdViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTvd;
    } catch (const tvdlab::PositivityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPositivity;
    } catch (const tvdlab::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}

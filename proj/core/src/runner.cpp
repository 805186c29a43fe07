#include "tvdlab/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "tvdlab/shock_sensor.hpp"

namespace tvdlab {

namespace {
constexpr int kMaxSteps = 20'000'000;
}

RunConfig resolve_defaults(const RunConfig& cfg) {
    const ProblemSpec& ps = find_problem(cfg.problem);
    RunConfig out = cfg;
    if (out.scheme.empty()) {
        out.scheme = ps.default_scheme;
        if (out.ccs.empty()) out.ccs = ps.default_ccs;
        if (ps.sensor_default && !out.has_sensor) {
            out.has_sensor = true;
            out.epsilon = ps.sensor_eps;
            out.delta = ps.sensor_delta;
        }
    } else if (out.ccs.empty()) {
        out.ccs = ps.default_ccs;
    }
    if (out.n <= 0) out.n = ps.default_n;
    if (out.nx <= 0) out.nx = out.n;
    if (out.ny <= 0) out.ny = out.n;
    if (out.cfl <= 0.0) out.cfl = ps.default_cfl;
    if (out.t_final < 0.0) {
        out.t_final = ps.kind == ProblemKind::riemann2d
                          ? riemann_config(ps.config_k).t_final
                          : ps.default_t;
    }
    return out;
}

std::uint64_t fnv1a(const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ull;
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void note_tv(RunResult& res, double t, double tv_now, bool strict) {
    const double prev = res.tv.tv.empty() ? tv_now : res.tv.tv.back();
    res.tv.push(t, tv_now);
    if (tv_now > prev + 1e-11) {
        ++res.tv_violations;
        if (strict)
            throw TvdViolationError(
                "total variation grew by " + format_g17(tv_now - prev) +
                    " at t=" + format_g17(t),
                tv_now - prev);
    }
}

void run_scalar(const RunConfig& cfg, const ProblemSpec& ps, RunResult& res) {
    const ScalarModel model = builtin_model(ps.model, ps.model_param);
    const InitialCondition ic = builtin_ic(ps.ic);
    res.grid = Grid1D(cfg.n, ic.a, ic.b);
    res.boundary = BoundaryPolicy{ic.default_boundary, 0.0, 0.0};
    const bool periodic = ic.default_boundary == BoundaryPolicy::Kind::periodic;

    res.u.assign(res.grid.total(), 0.0);
    for (int i = 0; i < cfg.n; ++i)
        res.u[res.grid.idx(i)] = ic.eval(res.grid.center(i));
    fill_ghosts(res.u, res.grid, res.boundary);

    const SchemeId scheme = parse_scheme(cfg.scheme, cfg.ccs);
    SensorParams sensor{cfg.epsilon, cfg.delta, cfg.mr_threshold};
    if (scheme.shock_corrected) sensor.validate();

    const TimeController tc(cfg.cfl, cfg.t_final);
    const double dx = res.grid.dx();
    double t = 0.0;
    note_tv(res, t, total_variation(res.u, res.grid, res.boundary), false);

    while (!tc.done(t) && res.steps < kMaxSteps) {
        const double dt = tc.next_dt(max_wave_speed(res.u, res.grid, model), dx, t);
        if (!(dt > 0.0)) break;
        std::vector<std::uint8_t> flags;
        const std::vector<std::uint8_t>* fp = nullptr;
        if (scheme.shock_corrected) {
            std::vector<double> interior(res.u.begin() + res.grid.ghost,
                                         res.u.begin() + res.grid.ghost + cfg.n);
            flags = shock_switch(interior, dx, sensor, periodic);
            fp = &flags;
        }
        auto step = step_scalar(res.u, res.grid, model, dt / dx, scheme, fp);
        res.u = std::move(step.u);
        fill_ghosts(res.u, res.grid, res.boundary);
        res.lmp_violations += step.lmp_violations;
        res.last_choices = std::move(step.choices);
        res.last_flags = std::move(flags);
        t += dt;
        ++res.steps;
        note_tv(res, t, total_variation(res.u, res.grid, res.boundary),
                cfg.strict_tvd);
    }
    res.t_end = t;
    res.digest = fnv1a(res.u.data() + res.grid.ghost, cfg.n * sizeof(double));
}

void run_tube(const RunConfig& cfg, const ProblemSpec& ps, RunResult& res) {
    const Grid1D grid(cfg.n, ps.x_min, ps.x_max);
    res.tube = make_tube(grid, cfg.gamma, ps.split_x, ps.left, ps.right);
    if (ps.id == "shuosher") {
        // Sine entropy wave on the right of the shock.
        for (int i = 0; i < cfg.n; ++i) {
            const double x = grid.center(i);
            if (x >= ps.split_x)
                res.tube.q[grid.idx(i)] = conserved_from_primitive(
                    1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0, cfg.gamma);
        }
        fill_euler_ghosts(res.tube.q, cfg.n, grid.ghost);
    }

    const SchemeId scheme = parse_scheme(cfg.scheme, cfg.ccs);
    SensorParams sensor{cfg.epsilon, cfg.delta, cfg.mr_threshold};
    if (scheme.shock_corrected) sensor.validate();

    const TimeController tc(cfg.cfl, cfg.t_final);
    const double dx = grid.dx();
    double t = 0.0;
    auto density_tv = [&] {
        std::vector<double> rho(cfg.n);
        for (int i = 0; i < cfg.n; ++i) rho[i] = res.tube.q[grid.idx(i)][0];
        return total_variation(rho, false);
    };
    note_tv(res, t, density_tv(), false);

    while (!tc.done(t) && res.steps < kMaxSteps) {
        const double dt = tc.next_dt(res.tube.max_speed(), dx, t);
        if (!(dt > 0.0)) break;
        std::vector<std::uint8_t> flags;
        step_euler_1d(res.tube, dt / dx, scheme,
                      scheme.shock_corrected ? &sensor : nullptr, &flags);
        res.last_flags = std::move(flags);
        t += dt;
        ++res.steps;
        note_tv(res, t, density_tv(), false);
    }
    res.t_end = t;
    res.digest =
        fnv1a(res.tube.q.data() + grid.ghost, cfg.n * sizeof(Vec4));
}

void run_riemann2d(const RunConfig& cfg, const ProblemSpec& ps, RunResult& res) {
    const RiemannConfig2D rc = riemann_config(ps.config_k);
    res.field = make_riemann_field(rc, cfg.nx, cfg.ny, cfg.gamma);

    const SchemeId scheme = parse_scheme(cfg.scheme, cfg.ccs);
    SensorParams sensor{cfg.epsilon, cfg.delta, cfg.mr_threshold};
    if (scheme.shock_corrected) sensor.validate();

    const double dx = res.field.grid.dx(), dy = res.field.grid.dy();
    double t = 0.0;
    while (cfg.t_final - t > 1e-12 * (1.0 + cfg.t_final) && res.steps < kMaxSteps) {
        const double sx = res.field.max_speed_x(), sy = res.field.max_speed_y();
        double dt = cfg.t_final - t;
        if (sx > 0.0) dt = std::min(dt, cfg.cfl * dx / sx);
        if (sy > 0.0) dt = std::min(dt, cfg.cfl * dy / sy);
        step_euler_2d_strang(res.field, dt, scheme,
                             scheme.shock_corrected ? &sensor : nullptr);
        t += dt;
        ++res.steps;
    }
    res.t_end = t;
    // Digest over the interior, row by row.
    std::uint64_t h = 14695981039346656037ull;
    for (int iy = 0; iy < cfg.ny; ++iy) {
        const Vec4* row = res.field.q.data() + res.field.grid.idx(0, iy);
        h ^= fnv1a(row, cfg.nx * sizeof(Vec4));
        h *= 1099511628211ull;
    }
    res.digest = h;
}

}  // namespace

RunResult run_problem(const RunConfig& raw) {
    const RunConfig cfg = resolve_defaults(raw);
    validate_config(cfg);
    const ProblemSpec& ps = find_problem(cfg.problem);
    RunResult res;
    res.config = cfg;
    res.kind = ps.kind;
    switch (ps.kind) {
        case ProblemKind::scalar: run_scalar(cfg, ps, res); break;
        case ProblemKind::euler_tube: run_tube(cfg, ps, res); break;
        case ProblemKind::riemann2d: run_riemann2d(cfg, ps, res); break;
    }
    return res;
}

ConvergenceTable convergence_sweep(const RunConfig& base,
                                   const std::vector<int>& n_list) {
    const ProblemSpec& ps = find_problem(resolve_defaults(base).problem);
    if (ps.kind != ProblemKind::scalar)
        throw ConfigError("convergence sweep needs a scalar problem with an exact "
                          "solution");
    const ScalarModel model = builtin_model(ps.model, ps.model_param);
    const InitialCondition ic = builtin_ic(ps.ic);

    std::vector<std::pair<int, ErrorNorms>> entries;
    for (int n : n_list) {
        RunConfig cfg = base;
        cfg.n = n;
        const RunResult res = run_problem(cfg);
        entries.emplace_back(
            n, error_norms(res.u, res.grid, [&](double x) {
                return exact_solution(model, ic, x, res.t_end);
            }));
    }
    return make_convergence_table(entries);
}

namespace {

std::ofstream open_channel(const std::string& dir, const std::string& name,
                           std::vector<std::string>& paths) {
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    paths.push_back(path);
    return out;
}

}  // namespace

std::vector<std::string> write_outputs(const RunResult& res,
                                       const std::string& dir) {
    std::vector<std::string> paths;
    const auto& cfg = res.config;
    auto wants = [&](const std::string& c) {
        for (const auto& x : cfg.channels)
            if (x == c) return true;
        return false;
    };

    if (wants("solution")) {
        auto out = open_channel(dir, cfg.problem + "_solution.csv", paths);
        if (res.kind == ProblemKind::scalar) {
            out << "x,u\n";
            for (int i = 0; i < res.grid.n_cells; ++i)
                out << format_g17(res.grid.center(i)) << ","
                    << format_g17(res.u[res.grid.idx(i)]) << "\n";
        } else if (res.kind == ProblemKind::euler_tube) {
            out << "x,rho,u,p\n";
            const auto& g = res.tube.grid;
            for (int i = 0; i < g.n_cells; ++i) {
                const Primitive w =
                    primitive_from_conserved(res.tube.q[g.idx(i)], res.tube.gamma);
                out << format_g17(g.center(i)) << "," << format_g17(w.rho) << ","
                    << format_g17(w.u) << "," << format_g17(w.p) << "\n";
            }
        } else {
            out << "x,y,rho,u,v,p\n";
            const auto& g = res.field.grid;
            for (int iy = 0; iy < g.ny; ++iy)
                for (int ix = 0; ix < g.nx; ++ix) {
                    const Primitive w = primitive_from_conserved(
                        res.field.q[g.idx(ix, iy)], res.field.gamma);
                    out << format_g17(g.cx(ix)) << "," << format_g17(g.cy(iy))
                        << "," << format_g17(w.rho) << "," << format_g17(w.u)
                        << "," << format_g17(w.v) << "," << format_g17(w.p)
                        << "\n";
                }
        }
    }
    if (wants("tv")) {
        auto out = open_channel(dir, cfg.problem + "_tv.csv", paths);
        out << "t,tv\n";
        for (size_t i = 0; i < res.tv.t.size(); ++i)
            out << format_g17(res.tv.t[i]) << "," << format_g17(res.tv.tv[i])
                << "\n";
    }
    if (wants("choices")) {
        auto out = open_channel(dir, cfg.problem + "_choices.csv", paths);
        out << "i,choice\n";
        for (size_t i = 0; i < res.last_choices.size(); ++i)
            out << i << "," << (int)res.last_choices[i] << "\n";
    }
    if (wants("shock_switch")) {
        auto out = open_channel(dir, cfg.problem + "_shock_switch.csv", paths);
        out << "i,flag\n";
        for (size_t i = 0; i < res.last_flags.size(); ++i)
            out << i << "," << (int)res.last_flags[i] << "\n";
    }
    return paths;
}

}  // namespace tvdlab

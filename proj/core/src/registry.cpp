#include "tvdlab/registry.hpp"

#include <cmath>

#include "tvdlab/config.hpp"

namespace tvdlab {

namespace {

std::vector<ProblemSpec> build_registry() {
    std::vector<ProblemSpec> r;
    auto scalar = [&](std::string id, std::string model, double param,
                      std::string ic, int n, double cfl, double t,
                      std::string scheme, std::string ccs, bool sensor) {
        ProblemSpec p;
        p.id = std::move(id);
        p.kind = ProblemKind::scalar;
        p.model = std::move(model);
        p.model_param = param;
        p.ic = std::move(ic);
        p.default_n = n;
        p.default_cfl = cfl;
        p.default_t = t;
        p.default_scheme = std::move(scheme);
        p.default_ccs = std::move(ccs);
        p.sensor_default = sensor;
        r.push_back(std::move(p));
    };

    scalar("lin-ic1", "advection", 1.0, "lin-ic1", 80, 0.5, 2.0,
           "flwbw-ccs", "upwind1", false);
    scalar("lin-ic2", "advection", 1.0, "lin-ic2", 80, 0.95, 20.0,
           "flwbw-ccs", "upwind1", false);
    scalar("lin-ic3", "advection", 1.0, "lin-ic3", 80, 0.5, 6.0,
           "flwbw-ccs", "upwind1", false);
    scalar("harten", "advection", 1.0, "harten", 160, 0.8, 2.0,
           "sc-flwbw-ccs", "force", true);
    scalar("burgers-ic2", "burgers", 1.0, "burgers-ic2", 80, 0.8, 0.8,
           "sc-flwbw-ccs", "force", true);
    // Pre-shock runs stop at half the quoted breaking time.
    scalar("burgers-ic2a", "burgers", 1.0, "burgers-ic2a", 80, 0.9,
           0.27803225 / 2.0, "sc-flwbw-ccs", "force", true);
    scalar("burgers-ic2b", "burgers", 1.0, "burgers-ic2b", 80, 0.9,
           0.65669683 / 2.0, "sc-flwbw-ccs", "force", true);
    scalar("burgers-ic2c", "burgers", 1.0, "burgers-ic2c", 80, 0.8,
           2.0 / M_PI, "sc-flwbw-ccs", "force", true);
    scalar("buckley-1", "buckley", 0.5, "buckley-1", 80, 0.8, 0.75,
           "sc-flwbw-ccs", "flic", true);
    scalar("buckley-2", "buckley", 0.25, "buckley-2", 100, 0.8, 0.4,
           "sc-flwbw-ccs", "flic", true);

    auto tube = [&](std::string id, double xa, double xb, double split,
                    std::array<double, 3> L, std::array<double, 3> R, int n,
                    double cfl, double t, std::string ccs) {
        ProblemSpec p;
        p.id = std::move(id);
        p.kind = ProblemKind::euler_tube;
        p.x_min = xa;
        p.x_max = xb;
        p.split_x = split;
        p.left = L;
        p.right = R;
        p.default_n = n;
        p.default_cfl = cfl;
        p.default_t = t;
        p.default_scheme = "sc-flwbw-ccs";
        p.default_ccs = std::move(ccs);
        p.sensor_default = true;
        r.push_back(std::move(p));
    };

    tube("sod", -10.0, 10.0, 0.0, {1.0, 0.0, 100000.0}, {0.125, 0.0, 10000.0},
         100, 0.5, 0.01, "flic");
    tube("lax", 0.0, 2.0, 1.0, {0.445, 0.698, 3.528}, {0.5, 0.0, 0.571},
         200, 0.8, 0.32, "flic");
    tube("laney", -10.0, 15.0, 0.0, {1.0, 0.0, 100000.0}, {0.01, 0.0, 1000.0},
         200, 0.8, 0.01, "flic");
    // Right state is the sine-density profile; the runner special-cases it.
    tube("shuosher", -5.0, 5.0, -4.0, {3.857143, 2.629369, 10.3333},
         {1.0, 0.0, 1.0}, 800, 0.8, 1.8, "flic");

    for (int k = 1; k <= 12; ++k) {
        ProblemSpec p;
        p.id = "riemann2d-" + std::to_string(k);
        p.kind = ProblemKind::riemann2d;
        p.config_k = k;
        p.default_n = 100;
        p.default_cfl = 0.5;
        p.default_t = -1.0;  // taken from the configuration table
        p.default_scheme = "sc-flwbw-ccs";
        p.default_ccs = "force";
        p.sensor_default = true;
        p.sensor_delta = 0.6;
        r.push_back(std::move(p));
    }
    return r;
}

}  // namespace

const std::vector<ProblemSpec>& registry() {
    static const std::vector<ProblemSpec> r = build_registry();
    return r;
}

const ProblemSpec& find_problem(const std::string& id) {
    for (const auto& p : registry())
        if (p.id == id) return p;
    throw ConfigError("unknown problem id '" + id + "'");
}

std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& p : registry()) ids.push_back(p.id);
    return ids;
}

}  // namespace tvdlab

#ifndef TVDLAB_REGISTRY_HPP
#define TVDLAB_REGISTRY_HPP

#include <array>
#include <string>
#include <vector>

namespace tvdlab {

enum class ProblemKind { scalar, euler_tube, riemann2d };

/// One benchmark problem with its published run settings as defaults.
struct ProblemSpec {
    std::string id;
    ProblemKind kind = ProblemKind::scalar;

    // scalar problems
    std::string model;        // advection | burgers | buckley
    double model_param = 1.0; // advection speed / viscosity ratio
    std::string ic;

    // euler tubes (rho, u, p per side); shuosher overrides the right
    // state with its sine density profile in the runner
    double x_min = 0.0, x_max = 1.0, split_x = 0.0;
    std::array<double, 3> left{}, right{};

    // 2d riemann
    int config_k = 0;

    int default_n = 100;
    double default_cfl = 0.5;
    double default_t = 1.0;
    std::string default_scheme = "flwbw-ccs";
    std::string default_ccs = "force";
    bool sensor_default = false;  // ships a [sensor] block by default
    double sensor_eps = 1e-8, sensor_delta = 0.8;
};

const std::vector<ProblemSpec>& registry();
const ProblemSpec& find_problem(const std::string& id);  // throws ConfigError
std::vector<std::string> registry_ids();

}  // namespace tvdlab

#endif

#ifndef TVDLAB_SCALAR_MODEL_HPP
#define TVDLAB_SCALAR_MODEL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tvdlab/grid.hpp"

namespace tvdlab {

/// Scalar conservation-law flux: f, its analytic derivative and the
/// states where f' vanishes.
struct ScalarModel {
    std::string name;
    std::function<double(double)> flux;
    std::function<double(double)> flux_deriv;
    std::vector<double> sonic_points;
};

/// Initial profile u0 on [a,b]. t_breaking holds the reference breaking
/// time where one is quoted for the test case.
struct InitialCondition {
    std::string name;
    std::function<double(double)> eval;
    double a = 0.0, b = 1.0;
    std::optional<double> t_breaking;
    BoundaryPolicy::Kind default_boundary = BoundaryPolicy::Kind::periodic;
};

/// Models: "advection" (speed a), "burgers", "buckley" (viscosity ratio alpha).
ScalarModel builtin_model(const std::string& name, double param = 1.0);

/// Registered profiles: lin-ic1..3, harten, burgers-ic2, burgers-ic2a/b/c,
/// buckley-1, buckley-2. Throws std::out_of_range for unknown names.
InitialCondition builtin_ic(const std::string& name);
std::vector<std::string> builtin_ic_names();

/// First shock-formation time -1/min u0'(x), located by dense sampling of a
/// central-difference derivative plus golden-section refinement.
/// Empty when min u0' >= 0 (no wave breaking).
std::optional<double> breaking_time(const InitialCondition& ic, int sample_n = 20000);

/// Entropy solution at (x, t) by characteristic tracing.
/// Advection: u0 wrapped around the periodic domain. Burgers: solves
/// u = u0(x - u t) to |residual| <= 1e-12; requires t below breaking time.
/// Throws std::domain_error for Burgers at/after breaking.
double exact_solution(const ScalarModel& model, const InitialCondition& ic,
                      double x, double t);

/// Wrap x into [a,b).
double wrap_periodic(double x, double a, double b);

}  // namespace tvdlab

#endif

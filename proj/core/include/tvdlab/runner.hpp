#ifndef TVDLAB_RUNNER_HPP
#define TVDLAB_RUNNER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvdlab/config.hpp"
#include "tvdlab/diagnostics.hpp"
#include "tvdlab/euler.hpp"
#include "tvdlab/registry.hpp"
#include "tvdlab/scalar_model.hpp"
#include "tvdlab/scalar_scheme.hpp"

namespace tvdlab {

/// Raised in strict-TVD mode when a step grows the total variation.
struct TvdViolationError : std::runtime_error {
    double increase;
    TvdViolationError(const std::string& what, double inc)
        : std::runtime_error(what), increase(inc) {}
};

struct RunResult {
    RunConfig config;  // with registry defaults applied
    ProblemKind kind = ProblemKind::scalar;
    int steps = 0;
    double t_end = 0.0;
    TVTrace tv;  // scalar solution / tube density trace
    int tv_violations = 0;
    int lmp_violations = 0;
    std::uint64_t digest = 0;  // FNV-1a over the final interior field

    // scalar
    Grid1D grid;
    BoundaryPolicy boundary;
    std::vector<double> u;  // ghost padded
    std::vector<CellChoice> last_choices;
    std::vector<std::uint8_t> last_flags;

    // euler
    EulerTube tube;
    EulerField2D field;
};

/// Fill zero/negative knobs from the problem's registry entry; an empty
/// scheme also pulls the registry scheme, CCS and sensor block.
RunConfig resolve_defaults(const RunConfig& cfg);

/// Execute one resolved+validated run. Throws ConfigError,
/// PositivityError or (strict mode) TvdViolationError.
RunResult run_problem(const RunConfig& cfg);

/// Refinement sweep for scalar problems with an exact oracle.
ConvergenceTable convergence_sweep(const RunConfig& base,
                                   const std::vector<int>& n_list);

std::uint64_t fnv1a(const void* data, std::size_t bytes);

/// Write the configured channels as CSV under dir; returns the paths.
std::vector<std::string> write_outputs(const RunResult& result,
                                       const std::string& dir);

}  // namespace tvdlab

#endif

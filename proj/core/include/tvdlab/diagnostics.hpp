#ifndef TVDLAB_DIAGNOSTICS_HPP
#define TVDLAB_DIAGNOSTICS_HPP

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "tvdlab/grid.hpp"

namespace tvdlab {

/// Sum of |u_{i+1} - u_i| over the interior; periodic domains close the loop.
double total_variation(std::span<const double> interior, bool periodic);
double total_variation(const std::vector<double>& field_with_ghosts,
                       const Grid1D& grid, const BoundaryPolicy& policy);

struct ErrorNorms {
    double l1;    // dx-weighted
    double linf;
};

/// Compare a ghost-padded field against an exact profile sampled at centers.
ErrorNorms error_norms(const std::vector<double>& field_with_ghosts,
                       const Grid1D& grid,
                       const std::function<double(double)>& exact_at);

struct ConvergenceRow {
    int n;
    double l1, l1_rate, linf, linf_rate;  // rates NaN on the first row
};
using ConvergenceTable = std::vector<ConvergenceRow>;

/// Attach log2 rates to a doubling-N error sequence. Zero or non-finite
/// predecessor errors yield NaN rates.
ConvergenceTable make_convergence_table(
    const std::vector<std::pair<int, ErrorNorms>>& entries);

struct TVTrace {
    std::vector<double> t, tv;

    void push(double time, double value) {
        t.push_back(time);
        tv.push_back(value);
    }
    /// Number of steps where TV grew by more than tol.
    int violations(double tol = 1e-11) const;
    /// Largest single-step increase (<= 0 when diminishing throughout).
    double max_increase() const;
};

}  // namespace tvdlab

#endif

#include "tvdlab/diagnostics.hpp"

#include <cmath>
#include <limits>

namespace tvdlab {

double total_variation(std::span<const double> interior, bool periodic) {
    double tv = 0.0;
    for (size_t i = 0; i + 1 < interior.size(); ++i)
        tv += std::fabs(interior[i + 1] - interior[i]);
    if (periodic && interior.size() > 1)
        tv += std::fabs(interior.front() - interior.back());
    return tv;
}

double total_variation(const std::vector<double>& field_with_ghosts,
                       const Grid1D& grid, const BoundaryPolicy& policy) {
    return total_variation(
        std::span<const double>(field_with_ghosts).subspan(grid.ghost, grid.n_cells),
        policy.kind == BoundaryPolicy::Kind::periodic);
}

ErrorNorms error_norms(const std::vector<double>& field_with_ghosts,
                       const Grid1D& grid,
                       const std::function<double(double)>& exact_at) {
    double l1 = 0.0, linf = 0.0;
    for (int i = 0; i < grid.n_cells; ++i) {
        const double e =
            std::fabs(field_with_ghosts[grid.idx(i)] - exact_at(grid.center(i)));
        l1 += e;
        linf = std::max(linf, e);
    }
    return {l1 * grid.dx(), linf};
}

ConvergenceTable make_convergence_table(
    const std::vector<std::pair<int, ErrorNorms>>& entries) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ConvergenceTable table;
    for (size_t k = 0; k < entries.size(); ++k) {
        const auto& [n, e] = entries[k];
        ConvergenceRow row{n, e.l1, nan, e.linf, nan};
        if (k > 0) {
            const auto& prev = entries[k - 1].second;
            auto rate = [](double e0, double e1) {
                if (!(e0 > 0.0) || !(e1 > 0.0) || !std::isfinite(e0) ||
                    !std::isfinite(e1))
                    return std::numeric_limits<double>::quiet_NaN();
                return std::log2(e0 / e1);
            };
            row.l1_rate = rate(prev.l1, e.l1);
            row.linf_rate = rate(prev.linf, e.linf);
        }
        table.push_back(row);
    }
    return table;
}

int TVTrace::violations(double tol) const {
    int count = 0;
    for (size_t i = 1; i < tv.size(); ++i)
        if (tv[i] > tv[i - 1] + tol) ++count;
    return count;
}

double TVTrace::max_increase() const {
    double worst = -std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < tv.size(); ++i)
        worst = std::max(worst, tv[i] - tv[i - 1]);
    return tv.size() > 1 ? worst : 0.0;
}

}  // namespace tvdlab

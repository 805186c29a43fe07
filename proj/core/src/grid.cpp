#include "tvdlab/grid.hpp"

#include <algorithm>

namespace tvdlab {

void fill_ghosts(std::vector<double>& field, const Grid1D& grid,
                 const BoundaryPolicy& policy) {
    const int n = grid.n_cells, g = grid.ghost;
    if (static_cast<int>(field.size()) != grid.total())
        throw std::invalid_argument("fill_ghosts: field length mismatch");
    for (int k = 0; k < g; ++k) {
        switch (policy.kind) {
            case BoundaryPolicy::Kind::periodic:
                field[g - 1 - k] = field[g + n - 1 - k];
                field[g + n + k] = field[g + k];
                break;
            case BoundaryPolicy::Kind::outflow:
                field[g - 1 - k] = field[g];
                field[g + n + k] = field[g + n - 1];
                break;
            case BoundaryPolicy::Kind::fixed_state:
                field[g - 1 - k] = policy.left;
                field[g + n + k] = policy.right;
                break;
        }
    }
}

void fill_ghosts(std::vector<double>& field, const Grid2D& grid,
                 const BoundaryPolicy& policy) {
    if (static_cast<int>(field.size()) != grid.total())
        throw std::invalid_argument("fill_ghosts: field length mismatch");
    if (policy.kind == BoundaryPolicy::Kind::fixed_state)
        throw std::invalid_argument("fill_ghosts: fixed-state unsupported in 2D");
    const int g = grid.ghost, nx = grid.nx, ny = grid.ny, s = grid.stride();
    const bool per = policy.kind == BoundaryPolicy::Kind::periodic;
    // x direction, interior rows
    for (int iy = 0; iy < ny; ++iy) {
        double* row = field.data() + (iy + g) * s;
        for (int k = 0; k < g; ++k) {
            row[g - 1 - k] = per ? row[g + nx - 1 - k] : row[g];
            row[g + nx + k] = per ? row[g + k] : row[g + nx - 1];
        }
    }
    // y direction, all columns (fills corners too)
    for (int ix = 0; ix < s; ++ix) {
        for (int k = 0; k < g; ++k) {
            field[(g - 1 - k) * s + ix] =
                per ? field[(g + ny - 1 - k) * s + ix] : field[g * s + ix];
            field[(g + ny + k) * s + ix] =
                per ? field[(g + k) * s + ix] : field[(g + ny - 1) * s + ix];
        }
    }
}

double TimeController::next_dt(double max_speed, double dx, double t_now) const {
    double dt = t_final - t_now;
    if (max_speed > 0.0) dt = std::min(dt, cfl * dx / max_speed);
    if (dt_cap > 0.0) dt = std::min(dt, dt_cap);
    return dt;
}

}  // namespace tvdlab

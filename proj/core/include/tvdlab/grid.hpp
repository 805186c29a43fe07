#ifndef TVDLAB_GRID_HPP
#define TVDLAB_GRID_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tvdlab {

/// Default ghost width: covers the Beam-Warming i-2 reach, the shock
/// sensor's i+-2 stencil and coarse-grid sampling.
inline constexpr int kGhostWidth = 3;

/// Uniform cell-centered 1D mesh. Cell i (0-based, interior) has center
/// x_min + (i + 0.5) * dx.
struct Grid1D {
    int n_cells = 0;
    double x_min = 0.0;
    double x_max = 1.0;
    int ghost = kGhostWidth;

    Grid1D() = default;
    Grid1D(int n, double a, double b, int g = kGhostWidth)
        : n_cells(n), x_min(a), x_max(b), ghost(g) {
        if (n <= 0 || !(b > a) || g < 0)
            throw std::invalid_argument("Grid1D: need n>0, x_max>x_min, ghost>=0");
    }

    double dx() const { return (x_max - x_min) / n_cells; }
    /// Center of interior cell i in [0, n_cells).
    double center(int i) const { return x_min + (i + 0.5) * dx(); }
    /// Total storage length including ghost layers.
    int total() const { return n_cells + 2 * ghost; }
    /// Storage index of interior cell i.
    int idx(int i) const { return i + ghost; }
};

/// Uniform 2D mesh, row-major storage: cell (ix, iy) lives at
/// index (iy + ghost) * (nx + 2 ghost) + (ix + ghost).
struct Grid2D {
    int nx = 0, ny = 0;
    double x_min = 0.0, x_max = 1.0;
    double y_min = 0.0, y_max = 1.0;
    int ghost = kGhostWidth;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double xa, double xb, double ya, double yb,
           int g = kGhostWidth)
        : nx(nx_), ny(ny_), x_min(xa), x_max(xb), y_min(ya), y_max(yb), ghost(g) {
        if (nx <= 0 || ny <= 0 || !(xb > xa) || !(yb > ya) || g < 0)
            throw std::invalid_argument("Grid2D: bad extents");
    }

    double dx() const { return (x_max - x_min) / nx; }
    double dy() const { return (y_max - y_min) / ny; }
    double cx(int ix) const { return x_min + (ix + 0.5) * dx(); }
    double cy(int iy) const { return y_min + (iy + 0.5) * dy(); }
    int stride() const { return nx + 2 * ghost; }
    int rows() const { return ny + 2 * ghost; }
    int total() const { return stride() * rows(); }
    int idx(int ix, int iy) const { return (iy + ghost) * stride() + (ix + ghost); }
};

/// Ghost-fill policy. Outflow copies the nearest interior cell
/// (zero-gradient); fixed-state holds frozen boundary values.
struct BoundaryPolicy {
    enum class Kind { periodic, outflow, fixed_state };
    Kind kind = Kind::periodic;
    double left = 0.0;   // fixed-state only
    double right = 0.0;  // fixed-state only

    static BoundaryPolicy periodic() { return {Kind::periodic, 0, 0}; }
    static BoundaryPolicy outflow() { return {Kind::outflow, 0, 0}; }
    static BoundaryPolicy fixed(double l, double r) { return {Kind::fixed_state, l, r}; }
};

/// Populate the ghost layers of a 1D field in place; interior untouched.
/// Idempotent for every policy.
void fill_ghosts(std::vector<double>& field, const Grid1D& grid,
                 const BoundaryPolicy& policy);

/// Per-axis ghost fill for a 2D field (corners filled by the y pass).
/// Fixed-state is not supported in 2D; the Riemann runs use outflow.
void fill_ghosts(std::vector<double>& field, const Grid2D& grid,
                 const BoundaryPolicy& policy);

/// CFL-driven step control. Every produced dt obeys
/// dt * max_speed / dx <= cfl and the final step lands on t_final.
struct TimeController {
    double cfl = 0.5;
    double t_final = 0.0;
    double dt_cap = 0.0;  // <=0 means "no cap"

    TimeController() = default;
    TimeController(double c, double tf, double cap = 0.0)
        : cfl(c), t_final(tf), dt_cap(cap) {
        if (!(c > 0.0) || c >= 1.0 || tf < 0.0)
            throw std::invalid_argument("TimeController: need cfl in (0,1), t_final>=0");
    }

    double next_dt(double max_speed, double dx, double t_now) const;
    bool done(double t_now) const {
        return t_final - t_now <= 1e-12 * (1.0 + t_final);
    }
};

}  // namespace tvdlab

#endif

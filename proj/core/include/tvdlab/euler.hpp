#ifndef TVDLAB_EULER_HPP
#define TVDLAB_EULER_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tvdlab/grid.hpp"
#include "tvdlab/scalar_scheme.hpp"
#include "tvdlab/shock_sensor.hpp"

namespace tvdlab {

/// Conserved state (rho, normal momentum, tangential momentum, energy).
/// 1D runs carry a zero tangential momentum so one line stepper serves
/// both the shock tubes and the 2D sweeps.
using Vec4 = std::array<double, 4>;

struct Primitive {
    double rho, u, v, p, c;
};

/// rho <= 0 or p <= 0 during conversion; carries the offending cell.
struct PositivityError : std::runtime_error {
    int cell;
    PositivityError(const std::string& what, int cell_index)
        : std::runtime_error(what), cell(cell_index) {}
};

Primitive primitive_from_conserved(const Vec4& q, double gamma, int cell = -1);
Vec4 conserved_from_primitive(double rho, double u, double v, double p, double gamma);

/// Physical flux along the normal direction.
Vec4 euler_flux(const Vec4& q, double gamma);

/// Steger-Warming flux vector splitting; F_plus + F_minus = euler_flux.
void steger_warming_split(const Vec4& q, double gamma, Vec4& F_plus, Vec4& F_minus,
                          int cell = -1);

/// Corrected secant wave speed for component j in [0,4) at the interface
/// between qi and qip1: (F^j_{i+1}-F^j_i)/(u^j_{i+1}-u^j_i), falling back to
/// the j-th ordered eigenvalue (u-c, u, u, u+c) of the average state when the
/// component jump degenerates, then clamped so sigma_min <= |a| <= sigma_max
/// with sigma_max/min the larger of each cell's extreme eigenvalue magnitudes.
double system_wave_speed(const Vec4& qi, const Vec4& qip1, int j, double gamma);

/// One update of a ghost-padded line of states (size n_cells + 2*ghost).
/// Hybrid schemes act componentwise on the +/- split flux increments with the
/// scalar bound sets per family; cells under a raised shock flag (and every
/// cell of a non-hybrid scheme) use the conservative CCS flux difference.
std::vector<Vec4> step_euler_line(const std::vector<Vec4>& q, int n_cells,
                                  int ghost, double gamma, double lambda,
                                  const SchemeId& scheme,
                                  const std::vector<std::uint8_t>* shock_flags = nullptr);

/// Largest |u| + c over interior cells of a line.
double max_signal_speed(const std::vector<Vec4>& q, int n_cells, int ghost,
                        double gamma);

/// 1D shock-tube state on a ghost-padded grid, outflow boundaries.
struct EulerTube {
    Grid1D grid;
    double gamma = 1.4;
    std::vector<Vec4> q;  // grid.total() entries

    double max_speed() const {
        return max_signal_speed(q, grid.n_cells, grid.ghost, gamma);
    }
};

EulerTube make_tube(const Grid1D& grid, double gamma, double split_x,
                    const std::array<double, 3>& left_rho_u_p,
                    const std::array<double, 3>& right_rho_u_p);

void fill_euler_ghosts(std::vector<Vec4>& q, int n_cells, int ghost);

/// Advance one step of size lambda = dt/dx. For shock-corrected schemes the
/// sensor runs on density; the raised flags are returned via flags_out.
void step_euler_1d(EulerTube& tube, double lambda, const SchemeId& scheme,
                   const SensorParams* sensor = nullptr,
                   std::vector<std::uint8_t>* flags_out = nullptr);

/// 2D field on the unit square (or any box), outflow boundaries.
struct EulerField2D {
    Grid2D grid;
    double gamma = 1.4;
    std::vector<Vec4> q;  // grid.total() entries, row-major

    double max_speed_x() const;
    double max_speed_y() const;
};

struct RiemannConfig2D {
    // Quadrant order: 1 = NE, 2 = NW, 3 = SW, 4 = SE about (0.5, 0.5).
    std::array<double, 4> p, rho, u, v;
    double t_final;
};

/// The twelve quadrant configurations, k in [1,12].
RiemannConfig2D riemann_config(int k);

EulerField2D make_riemann_field(const RiemannConfig2D& cfg, int nx, int ny,
                                double gamma = 1.4);

/// Strang sweep X(dt/2) Y(dt) X(dt/2); x_first=false runs Y X Y instead
/// (used by the symmetry diagnostics).
void step_euler_2d_strang(EulerField2D& field, double dt, const SchemeId& scheme,
                          const SensorParams* sensor = nullptr, bool x_first = true);

}  // namespace tvdlab

#endif

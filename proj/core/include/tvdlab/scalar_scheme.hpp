#ifndef TVDLAB_SCALAR_SCHEME_HPP
#define TVDLAB_SCALAR_SCHEME_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tvdlab/grid.hpp"
#include "tvdlab/scalar_model.hpp"
#include "tvdlab/tvd_core.hpp"

namespace tvdlab {

enum class BaseScheme {
    upwind1,
    lax_wendroff,
    beam_warming,
    fromm,
    force,
    flic_limited,
    hybrid_lw,
    hybrid_bw,
    hybrid_flwbw,
};

/// Conservative fallback used where the TVD bounds fail or a shock is flagged.
enum class CcsId { upwind1, force, flic };

enum class Limiter { minbee, superbee };

struct SchemeId {
    BaseScheme base = BaseScheme::hybrid_flwbw;
    CcsId ccs = CcsId::force;
    Limiter limiter = Limiter::minbee;
    bool shock_corrected = false;

    bool is_hybrid() const {
        return base == BaseScheme::hybrid_lw || base == BaseScheme::hybrid_bw ||
               base == BaseScheme::hybrid_flwbw;
    }
};

SchemeId parse_scheme(const std::string& scheme, const std::string& ccs);
std::string scheme_name(const SchemeId& id);

/// Per-cell branch taken by a hybrid step.
enum class CellChoice : std::uint8_t { FROMM, LXW, BW, CCS };

/// Test hook: force the bound sets open or closed.
enum class BoundsMode { normal, accept_all, reject_all };

struct ScalarStepResult {
    std::vector<double> u;               // ghosts not yet refilled
    std::vector<CellChoice> choices;     // one per interior cell
    int lmp_violations = 0;              // non-CCS cells failing the hull check
};

// Interface flux functions. `k` indexes the interface between cells k and
// k+1 of the ghost-padded arrays; `a` holds secant speeds per interface.
double flux_lxw(double F_i, double F_ip1, double a_half, double lambda, double du);
double flux_force(double F_i, double F_ip1, double u_i, double u_ip1,
                  double lambda, double a_half);
double flux_bw(std::span<const double> u, std::span<const double> F,
               std::span<const double> a, double lambda, int k);
double flux_fromm(std::span<const double> u, std::span<const double> F,
                  std::span<const double> a, double lambda, int k);
double flux_flic(std::span<const double> u, std::span<const double> F,
                 std::span<const double> a, double lambda, int k, Limiter lim);
double limiter_phi(Limiter lim, double r);

/// One explicit step. `u` must have its ghost cells filled; lambda = dt/dx.
/// Hybrid schemes route each cell per the bound sets of Theorems 1-3 and use
/// the non-conservative half-incremental updates; CCS cells use conservative
/// flux differencing. `shock_flags` (per interior cell) forces CCS where set.
ScalarStepResult step_scalar(const std::vector<double>& u, const Grid1D& grid,
                             const ScalarModel& model, double lambda,
                             const SchemeId& scheme,
                             const std::vector<std::uint8_t>* shock_flags = nullptr,
                             BoundsMode bounds_mode = BoundsMode::normal);

/// Largest |f'(u_i)| over cells and |a_{i+1/2}| over interfaces, for CFL control.
double max_wave_speed(const std::vector<double>& u, const Grid1D& grid,
                      const ScalarModel& model);

}  // namespace tvdlab

#endif

#ifndef TVDLAB_TVD_CORE_HPP
#define TVDLAB_TVD_CORE_HPP

#include <optional>
#include <span>
#include <vector>

#include "tvdlab/scalar_model.hpp"

namespace tvdlab {

/// Secant wave speed at the interface between states u_i and u_ip1,
/// falling back to f'(u_i) when the states coincide.
double interface_speed(double u_i, double u_ip1, const ScalarModel& model);

/// Sign split a = a_plus + a_minus with a_plus >= 0 >= a_minus.
struct SpeedSplit {
    double plus;
    double minus;
};
inline SpeedSplit split_speed(double a) {
    return a > 0.0 ? SpeedSplit{a, 0.0} : SpeedSplit{0.0, a};
}

/// Per-interface data for one wave family over a line of cells:
/// speeds[k] and flux_diffs[k] belong to interface k+1/2 (between cells
/// k and k+1). For the '+' family speeds are >= 0, for '-' they are <= 0,
/// and flux_diffs satisfy dF = a * du.
struct FamilyLine {
    std::span<const double> speeds;
    std::span<const double> flux_diffs;
};

enum class WaveSign { plus, minus };

/// Smoothness parameter r+/- at cell i:
///   r+_i = [(1 - l a+_{i-1/2}) dF+_{i-1/2}] / [(1 - l a+_{i+1/2}) dF+_{i+1/2}]
///   r-_i = [(1 + l a-_{i+1/2}) dF-_{i+1/2}] / [(1 + l a-_{i-1/2}) dF-_{i-1/2}]
/// Degenerate denominators map to signed infinity (the numerator's sign);
/// 0/0 maps to 1.
double smoothness_ratio(const FamilyLine& fam, double lambda, int i, WaveSign sign);

/// TVD bound pair for the Lax-Wendroff scheme at local CFL number nu
/// (sign-symmetric): kappa1 = -(1-|nu|)/(1+|nu|), gamma1 = |nu|/(2+|nu|).
struct LxwBounds {
    double kappa1;
    double gamma1;
};
LxwBounds bounds_lxw(double nu);

/// TVD bound pair for the Beam-Warming scheme:
/// kappa2 = -(2-|nu|)/|nu|, gamma2 = (3-|nu|)/(1-|nu|) (inf at |nu|=1).
/// Empty at nu = 0 (degenerate speed; callers fall back to the CCS).
struct BwBounds {
    double kappa2;
    double gamma2;
};
std::optional<BwBounds> bounds_bw(double nu);

/// Convex-hull check of the local maximum principle: u_new must lie in
/// [min, max] of {u_i, upwind neighbor}, tolerance 1e-12 scaled.
bool lmp_check(double u_new, double u_i, double u_upwind);

}  // namespace tvdlab

#endif

#ifndef TVDLAB_SHOCK_SENSOR_HPP
#define TVDLAB_SHOCK_SENSOR_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace tvdlab {

struct SensorParams {
    double epsilon = 1e-8;      // regularizer in MR and LR denominators
    double delta = 0.8;         // LR cutoff in (0,1]
    double mr_threshold = 4.0;  // multigrid-ratio gate

    void validate() const;  // throws std::invalid_argument
};

struct CompactDerivatives {
    std::vector<double> d4, d5, d6;
};

/// 4th/5th/6th derivatives of an interior field (no ghosts) by repeated
/// application of the 6th-order compact first-derivative operator
///   (1/3)f'_{i-1} + f'_i + (1/3)f'_{i+1}
///       = (14/9)(f_{i+1}-f_{i-1})/(2h) + (1/9)(f_{i+2}-f_{i-2})/(4h).
/// Periodic fields use the cyclic tridiagonal solve; otherwise the field is
/// extended with zero gradient and boundary derivative couplings dropped.
/// Requires field.size() >= 8.
CompactDerivatives compact_derivatives(std::span<const double> field, double dx,
                                       bool periodic);

/// MR(i) = T_C(i)/(T_F(i)+eps) with T(i,h) = sum_{k=4..6} |h^k u^(k)_i|,
/// T_C from the even-index restriction at spacing 2h, injected back by i/2.
std::vector<double> multigrid_ratio(std::span<const double> field, double dx,
                                    double eps, bool periodic);

/// One-sided slope ratio LR = |(R^2 - L^2)/(L^2 + R^2 + eps)| with
/// L = 3u_i - 4u_{i-1} + u_{i-2}, R = 3u_i - 4u_{i+1} + u_{i+2}.
/// Out-of-range neighbors wrap (periodic) or clamp to the edge.
double local_ratio(std::span<const double> field, int i, double eps,
                   bool periodic);

/// Full detector: flag cell i iff MR(i) <= mr_threshold and LR(i) >= delta,
/// then dilate the flag set by one cell each side.
std::vector<std::uint8_t> shock_switch(std::span<const double> field, double dx,
                                       const SensorParams& params, bool periodic);

}  // namespace tvdlab

#endif

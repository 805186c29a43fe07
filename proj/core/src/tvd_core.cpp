#include "tvdlab/tvd_core.hpp"

#include <cmath>
#include <limits>

namespace tvdlab {

double interface_speed(double u_i, double u_ip1, const ScalarModel& model) {
    const double du = u_ip1 - u_i;
    if (std::fabs(du) > 1e-12 * (1.0 + std::fabs(u_i)))
        return (model.flux(u_ip1) - model.flux(u_i)) / du;
    return model.flux_deriv(u_i);
}

namespace {
constexpr double kDenTol = 1e-14;
}

double smoothness_ratio(const FamilyLine& fam, double lambda, int i, WaveSign sign) {
    double num, den;
    if (sign == WaveSign::plus) {
        num = (1.0 - lambda * fam.speeds[i - 1]) * fam.flux_diffs[i - 1];
        den = (1.0 - lambda * fam.speeds[i]) * fam.flux_diffs[i];
    } else {
        num = (1.0 + lambda * fam.speeds[i]) * fam.flux_diffs[i];
        den = (1.0 + lambda * fam.speeds[i - 1]) * fam.flux_diffs[i - 1];
    }
    if (std::fabs(den) < kDenTol) {
        if (std::fabs(num) < kDenTol) return 1.0;  // locally flat
        return std::copysign(std::numeric_limits<double>::infinity(), num);
    }
    return num / den;
}

LxwBounds bounds_lxw(double nu) {
    const double x = std::fabs(nu);  // sigma(x)*x = |x|, sigma(0) = +1
    return {-(1.0 - x) / (1.0 + x), x / (2.0 + x)};
}

std::optional<BwBounds> bounds_bw(double nu) {
    const double x = std::fabs(nu);
    if (x == 0.0) return std::nullopt;
    const double kappa2 = -(2.0 - x) / x;
    const double gamma2 = x < 1.0 ? (3.0 - x) / (1.0 - x)
                                  : std::numeric_limits<double>::infinity();
    return BwBounds{kappa2, gamma2};
}

bool lmp_check(double u_new, double u_i, double u_upwind) {
    const double tol = 1e-12 * (1.0 + std::fabs(u_i));
    const double lo = std::min(u_i, u_upwind), hi = std::max(u_i, u_upwind);
    return u_new >= lo - tol && u_new <= hi + tol;
}

}  // namespace tvdlab

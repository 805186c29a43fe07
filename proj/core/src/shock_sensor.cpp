#include "tvdlab/shock_sensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tvdlab {

void SensorParams::validate() const {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("sensor: epsilon must lie in (0,1)");
    if (!(delta > 0.0) || delta > 1.0)
        throw std::invalid_argument("sensor: delta must lie in (0,1]");
    if (!(mr_threshold > 0.0))
        throw std::invalid_argument("sensor: mr_threshold must be positive");
}

namespace {

// Tridiagonal solve with constant off-diagonal `off`; consumes b and r.
std::vector<double> thomas(double off, std::vector<double> b,
                           std::vector<double> r) {
    const int n = (int)b.size();
    std::vector<double> c(n);
    c[0] = off / b[0];
    r[0] /= b[0];
    for (int i = 1; i < n; ++i) {
        const double m = b[i] - off * c[i - 1];
        c[i] = off / m;
        r[i] = (r[i] - off * r[i - 1]) / m;
    }
    for (int i = n - 2; i >= 0; --i) r[i] -= c[i] * r[i + 1];
    return r;
}

std::vector<double> compact_d1(std::span<const double> f, double dx,
                               bool periodic) {
    const int n = (int)f.size();
    auto at = [&](int i) {
        if (periodic) return f[((i % n) + n) % n];
        return f[std::clamp(i, 0, n - 1)];
    };
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i)
        rhs[i] = (14.0 / 9.0) * (at(i + 1) - at(i - 1)) / (2.0 * dx) +
                 (1.0 / 9.0) * (at(i + 2) - at(i - 2)) / (4.0 * dx);

    const double off = 1.0 / 3.0;
    if (!periodic) {
        // Zero-gradient extension; boundary rows drop the off-domain coupling.
        return thomas(off, std::vector<double>(n, 1.0), std::move(rhs));
    }
    // Cyclic system via Sherman-Morrison rank-one correction.
    const double alpha = off, beta = off, gamma = -1.0;
    std::vector<double> b(n, 1.0);
    b[0] = 1.0 - gamma;
    b[n - 1] = 1.0 - alpha * beta / gamma;
    auto x = thomas(off, b, std::move(rhs));
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    auto z = thomas(off, b, std::move(u));
    const double fact = (x[0] + beta * x[n - 1] / gamma) /
                        (1.0 + z[0] + beta * z[n - 1] / gamma);
    for (int i = 0; i < n; ++i) x[i] -= fact * z[i];
    return x;
}

}  // namespace

CompactDerivatives compact_derivatives(std::span<const double> field, double dx,
                                       bool periodic) {
    if (field.size() < 8)
        throw std::invalid_argument("compact_derivatives: need at least 8 samples");
    std::vector<double> d(field.begin(), field.end());
    CompactDerivatives out;
    for (int k = 1; k <= 6; ++k) {
        d = compact_d1(d, dx, periodic);
        if (k == 4) out.d4 = d;
        if (k == 5) out.d5 = d;
        if (k == 6) out.d6 = d;
    }
    return out;
}

namespace {

std::vector<double> truncation_sum(std::span<const double> field, double dx,
                                   bool periodic) {
    const auto der = compact_derivatives(field, dx, periodic);
    const double h4 = std::pow(dx, 4), h5 = std::pow(dx, 5), h6 = std::pow(dx, 6);
    std::vector<double> t(field.size());
    for (size_t i = 0; i < field.size(); ++i)
        t[i] = std::fabs(h4 * der.d4[i]) + std::fabs(h5 * der.d5[i]) +
               std::fabs(h6 * der.d6[i]);
    return t;
}

}  // namespace

std::vector<double> multigrid_ratio(std::span<const double> field, double dx,
                                    double eps, bool periodic) {
    const int n = (int)field.size();
    const int nc = (n + 1) / 2;  // even-index restriction
    if (nc < 8)
        throw std::invalid_argument("multigrid_ratio: field too small to coarsen");
    std::vector<double> coarse(nc);
    for (int j = 0; j < nc; ++j) coarse[j] = field[2 * j];

    const auto tf = truncation_sum(field, dx, periodic);
    const auto tc = truncation_sum(coarse, 2.0 * dx, periodic);
    std::vector<double> mr(n);
    for (int i = 0; i < n; ++i) mr[i] = tc[i / 2] / (tf[i] + eps);
    return mr;
}

double local_ratio(std::span<const double> field, int i, double eps,
                   bool periodic) {
    const int n = (int)field.size();
    auto at = [&](int k) {
        if (periodic) return field[((k % n) + n) % n];
        return field[std::clamp(k, 0, n - 1)];
    };
    const double dl = 3.0 * at(i) - 4.0 * at(i - 1) + at(i - 2);
    const double dr = 3.0 * at(i) - 4.0 * at(i + 1) + at(i + 2);
    return std::fabs((dr * dr - dl * dl) / (dl * dl + dr * dr + eps));
}

std::vector<std::uint8_t> shock_switch(std::span<const double> field, double dx,
                                       const SensorParams& params, bool periodic) {
    params.validate();
    const int n = (int)field.size();
    const auto mr = multigrid_ratio(field, dx, params.epsilon, periodic);
    std::vector<std::uint8_t> raw(n, 0);
    for (int i = 0; i < n; ++i) {
        if (mr[i] > params.mr_threshold) continue;
        if (local_ratio(field, i, params.epsilon, periodic) >= params.delta)
            raw[i] = 1;
    }
    std::vector<std::uint8_t> out = raw;
    for (int i = 0; i < n; ++i) {
        if (!raw[i]) continue;
        if (i > 0) out[i - 1] = 1;
        else if (periodic) out[n - 1] = 1;
        if (i + 1 < n) out[i + 1] = 1;
        else if (periodic) out[0] = 1;
    }
    return out;
}

}  // namespace tvdlab

#include "tvdlab/scalar_scheme.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace tvdlab {

SchemeId parse_scheme(const std::string& scheme, const std::string& ccs) {
    SchemeId id;
    std::string s = scheme;
    if (s.rfind("sc-", 0) == 0) {
        id.shock_corrected = true;
        s = s.substr(3);
    }
    if (s == "upwind1") id.base = BaseScheme::upwind1;
    else if (s == "lxw" || s == "lax-wendroff") id.base = BaseScheme::lax_wendroff;
    else if (s == "bw" || s == "beam-warming") id.base = BaseScheme::beam_warming;
    else if (s == "fromm") id.base = BaseScheme::fromm;
    else if (s == "force") id.base = BaseScheme::force;
    else if (s == "flic") id.base = BaseScheme::flic_limited;
    else if (s == "lw-ccs") id.base = BaseScheme::hybrid_lw;
    else if (s == "bw-ccs") id.base = BaseScheme::hybrid_bw;
    else if (s == "flwbw-ccs") id.base = BaseScheme::hybrid_flwbw;
    else throw std::invalid_argument("unknown scheme '" + scheme + "'");

    std::string c = ccs;
    std::string lim = "minbee";
    if (auto p = c.find('-'); p != std::string::npos) {
        lim = c.substr(p + 1);
        c = c.substr(0, p);
    }
    if (c == "upwind1") id.ccs = CcsId::upwind1;
    else if (c == "force" || c.empty()) id.ccs = CcsId::force;
    else if (c == "flic") id.ccs = CcsId::flic;
    else throw std::invalid_argument("unknown ccs '" + ccs + "'");
    if (lim == "minbee") id.limiter = Limiter::minbee;
    else if (lim == "superbee") id.limiter = Limiter::superbee;
    else throw std::invalid_argument("unknown limiter '" + lim + "'");
    if (id.shock_corrected && !id.is_hybrid())
        throw std::invalid_argument("sc- prefix requires a hybrid scheme");
    return id;
}

std::string scheme_name(const SchemeId& id) {
    std::string s;
    switch (id.base) {
        case BaseScheme::upwind1: s = "upwind1"; break;
        case BaseScheme::lax_wendroff: s = "lxw"; break;
        case BaseScheme::beam_warming: s = "bw"; break;
        case BaseScheme::fromm: s = "fromm"; break;
        case BaseScheme::force: s = "force"; break;
        case BaseScheme::flic_limited: s = "flic"; break;
        case BaseScheme::hybrid_lw: s = "lw-ccs"; break;
        case BaseScheme::hybrid_bw: s = "bw-ccs"; break;
        case BaseScheme::hybrid_flwbw: s = "flwbw-ccs"; break;
    }
    if (id.shock_corrected) s = "sc-" + s;
    return s;
}

double flux_lxw(double F_i, double F_ip1, double a_half, double lambda, double du) {
    return 0.5 * (F_i + F_ip1) - 0.5 * lambda * a_half * a_half * du;
}

double flux_force(double F_i, double F_ip1, double u_i, double u_ip1,
                  double lambda, double a_half) {
    const double du = u_ip1 - u_i;
    const double lf = 0.5 * (F_i + F_ip1) - du / (2.0 * lambda);
    return 0.5 * (lf + flux_lxw(F_i, F_ip1, a_half, lambda, du));
}

double flux_bw(std::span<const double> u, std::span<const double> F,
               std::span<const double> a, double lambda, int k) {
    if (a[k] >= 0.0) {  // sigma(0) = +1: degenerate interfaces take the + branch
        const double am = a[k - 1];
        return F[k] + 0.5 * am * (1.0 - lambda * am) * (u[k] - u[k - 1]);
    }
    const double ap = a[k + 1];
    return F[k + 1] - 0.5 * ap * (1.0 + lambda * ap) * (u[k + 2] - u[k + 1]);
}

double flux_fromm(std::span<const double> u, std::span<const double> F,
                  std::span<const double> a, double lambda, int k) {
    const double lxw = flux_lxw(F[k], F[k + 1], a[k], lambda, u[k + 1] - u[k]);
    return 0.5 * (lxw + flux_bw(u, F, a, lambda, k));
}

double limiter_phi(Limiter lim, double r) {
    if (lim == Limiter::minbee) return std::max(0.0, std::min(1.0, r));
    return std::max({0.0, std::min(2.0 * r, 1.0), std::min(r, 2.0)});
}

double flux_flic(std::span<const double> u, std::span<const double> F,
                 std::span<const double> a, double lambda, int k, Limiter lim) {
    const double du = u[k + 1] - u[k];
    const double num = a[k] >= 0.0 ? u[k] - u[k - 1] : u[k + 2] - u[k + 1];
    double r;
    if (std::fabs(du) < 1e-14)
        r = std::fabs(num) < 1e-14 ? 1.0 : std::copysign(1e30, num);
    else
        r = num / du;
    const double fc = flux_force(F[k], F[k + 1], u[k], u[k + 1], lambda, a[k]);
    const double lxw = flux_lxw(F[k], F[k + 1], a[k], lambda, du);
    return fc + limiter_phi(lim, r) * (lxw - fc);
}

namespace {

double ccs_interface_flux(CcsId ccs, Limiter lim, std::span<const double> u,
                          std::span<const double> F, std::span<const double> a,
                          double lambda, int k) {
    switch (ccs) {
        case CcsId::upwind1:
            return 0.5 * (F[k] + F[k + 1]) -
                   0.5 * std::fabs(a[k]) * (u[k + 1] - u[k]);
        case CcsId::force:
            return flux_force(F[k], F[k + 1], u[k], u[k + 1], lambda, a[k]);
        case CcsId::flic:
            return flux_flic(u, F, a, lambda, k, lim);
    }
    return 0.0;
}

double base_interface_flux(const SchemeId& id, std::span<const double> u,
                           std::span<const double> F, std::span<const double> a,
                           double lambda, int k) {
    switch (id.base) {
        case BaseScheme::upwind1:
            return ccs_interface_flux(CcsId::upwind1, id.limiter, u, F, a, lambda, k);
        case BaseScheme::lax_wendroff:
            return flux_lxw(F[k], F[k + 1], a[k], lambda, u[k + 1] - u[k]);
        case BaseScheme::beam_warming:
            return flux_bw(u, F, a, lambda, k);
        case BaseScheme::fromm:
            return flux_fromm(u, F, a, lambda, k);
        case BaseScheme::force:
            return ccs_interface_flux(CcsId::force, id.limiter, u, F, a, lambda, k);
        case BaseScheme::flic_limited:
            return ccs_interface_flux(CcsId::flic, id.limiter, u, F, a, lambda, k);
        default:
            throw std::logic_error("base_interface_flux called with hybrid scheme");
    }
}

}  // namespace

ScalarStepResult step_scalar(const std::vector<double>& u, const Grid1D& grid,
                             const ScalarModel& model, double lambda,
                             const SchemeId& scheme,
                             const std::vector<std::uint8_t>* shock_flags,
                             BoundsMode bounds_mode) {
    const int n = grid.n_cells, g = grid.ghost, N = grid.total();
    if ((int)u.size() != N)
        throw std::invalid_argument("step_scalar: field size mismatch");
    if (g < kGhostWidth)
        throw std::invalid_argument("step_scalar: ghost width below stencil radius");
    if (shock_flags && (int)shock_flags->size() != n)
        throw std::invalid_argument("step_scalar: shock flag size mismatch");

    std::vector<double> F(N), a(N - 1), dF(N - 1);
    for (int i = 0; i < N; ++i) F[i] = model.flux(u[i]);
    for (int k = 0; k + 1 < N; ++k) {
        a[k] = interface_speed(u[k], u[k + 1], model);
        dF[k] = a[k] * (u[k + 1] - u[k]);  // Eq.-split increment: dF = a du
    }

    ScalarStepResult out;
    out.u = u;
    out.choices.assign(n, CellChoice::CCS);

    // Conservative interface fluxes for the CCS / pure-scheme path.
    std::vector<double> Fc(N - 1, 0.0);
    const bool hybrid = scheme.is_hybrid();
    for (int k = g - 1; k <= n + g - 1; ++k)
        Fc[k] = hybrid ? ccs_interface_flux(scheme.ccs, scheme.limiter, u, F, a,
                                            lambda, k)
                       : base_interface_flux(scheme, u, F, a, lambda, k);

    if (!hybrid) {
        for (int c = g; c < n + g; ++c)
            out.u[c] = u[c] - lambda * (Fc[c] - Fc[c - 1]);
        return out;
    }

    const FamilyLine fam{a, dF};
    for (int c = g; c < n + g; ++c) {
        const bool flagged = shock_flags && (*shock_flags)[c - g];
        const bool posw = a[c - 1] > 0.0 && a[c] > 0.0;
        const bool negw = a[c - 1] < 0.0 && a[c] < 0.0;
        CellChoice choice = CellChoice::CCS;

        if (!flagged && (posw || negw)) {
            const WaveSign sgn = posw ? WaveSign::plus : WaveSign::minus;
            const double nu = posw ? lambda * a[c - 1] : lambda * a[c];
            bool lxw_ok = false, bw_ok = false;
            if (bounds_mode == BoundsMode::accept_all) {
                lxw_ok = bw_ok = true;
            } else if (bounds_mode == BoundsMode::normal) {
                const double r = smoothness_ratio(fam, lambda, c, sgn);
                const LxwBounds lb = bounds_lxw(nu);
                lxw_ok = r <= lb.kappa1 || r >= lb.gamma1;
                if (const auto bb = bounds_bw(nu)) {
                    // BW stencil extends one interface further upwind.
                    const bool stencil = posw ? a[c - 2] > 0.0 : a[c + 1] < 0.0;
                    if (stencil) {
                        const double rn =
                            smoothness_ratio(fam, lambda, posw ? c - 1 : c + 1, sgn);
                        bw_ok = rn >= bb->kappa2 && rn <= bb->gamma2;
                    }
                }
            }
            switch (scheme.base) {
                case BaseScheme::hybrid_lw:
                    if (lxw_ok) choice = CellChoice::LXW;
                    break;
                case BaseScheme::hybrid_bw:
                    if (bw_ok) choice = CellChoice::BW;
                    break;
                default:  // hybrid_flwbw: Fromm first, then LxW, then BW
                    if (lxw_ok && bw_ok) choice = CellChoice::FROMM;
                    else if (lxw_ok) choice = CellChoice::LXW;
                    else if (bw_ok) choice = CellChoice::BW;
                    break;
            }
        }

        double un;
        if (choice == CellChoice::CCS) {
            un = u[c] - lambda * (Fc[c] - Fc[c - 1]);
        } else {
            // Half-incremental non-conservative updates.
            const double lxw_up =
                u[c] - 0.5 * lambda * ((1.0 - lambda * a[c]) * dF[c] +
                                       (1.0 + lambda * a[c - 1]) * dF[c - 1]);
            double bw_up = 0.0;
            if (choice != CellChoice::LXW)
                bw_up = posw
                    ? u[c] - 0.5 * lambda * (3.0 - lambda * a[c - 1]) * dF[c - 1] +
                          0.5 * lambda * (1.0 - lambda * a[c - 2]) * dF[c - 2]
                    : u[c] + 0.5 * lambda * (1.0 + lambda * a[c + 1]) * dF[c + 1] -
                          0.5 * lambda * (3.0 + lambda * a[c]) * dF[c];
            un = choice == CellChoice::LXW ? lxw_up
                 : choice == CellChoice::BW ? bw_up
                                            : 0.5 * (lxw_up + bw_up);
            if (!lmp_check(un, u[c], posw ? u[c - 1] : u[c + 1]))
                ++out.lmp_violations;
        }
        out.u[c] = un;
        out.choices[c - g] = choice;
    }
    return out;
}

double max_wave_speed(const std::vector<double>& u, const Grid1D& grid,
                      const ScalarModel& model) {
    const int g = grid.ghost, n = grid.n_cells;
    double s = 0.0;
    for (int c = g; c < n + g; ++c)
        s = std::max(s, std::fabs(model.flux_deriv(u[c])));
    for (int k = g - 1; k <= n + g - 1; ++k)
        s = std::max(s, std::fabs(interface_speed(u[k], u[k + 1], model)));
    return s;
}

}  // namespace tvdlab

#include <cmath>

#include "doctest.h"
#include "tvdlab/scalar_scheme.hpp"

using namespace tvdlab;

namespace {

// Periodic advection field sampled from a callable.
template <class F>
std::vector<double> make_field(const Grid1D& g, F&& f) {
    std::vector<double> u(g.total(), 0.0);
    for (int i = 0; i < g.n_cells; ++i) u[g.idx(i)] = f(g.center(i));
    fill_ghosts(u, g, BoundaryPolicy::periodic());
    return u;
}

std::vector<double> interior(const std::vector<double>& u, const Grid1D& g) {
    return {u.begin() + g.ghost, u.begin() + g.ghost + g.n_cells};
}

}  // namespace

TEST_CASE("interface flux formulas on reference data") {
    // advection a=1: F = u
    CHECK(flux_lxw(0.0, 1.0, 1.0, 1.0, 1.0) == doctest::Approx(0.0));
    CHECK(flux_lxw(0.0, 1.0, 1.0, 0.5, 1.0) == doctest::Approx(0.25));
    CHECK(flux_lxw(2.0, 2.0, 1.0, 0.5, 0.0) == doctest::Approx(2.0));

    CHECK(flux_force(0.0, 1.0, 0.0, 1.0, 0.5, 1.0) == doctest::Approx(-0.125));
    CHECK(flux_force(2.0, 2.0, 2.0, 2.0, 0.5, 1.0) == doctest::Approx(2.0));

    const std::vector<double> u{0.0, 1.0, 1.0};
    const std::vector<double> F = u;  // a = 1
    const std::vector<double> a{1.0, 1.0};
    CHECK(flux_bw(u, F, a, 0.5, 1) == doctest::Approx(1.0 + 0.25));
    CHECK(flux_bw(u, F, a, 1.0, 1) == doctest::Approx(1.0));  // unit-CFL term drops

    const std::vector<double> u2{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> a2{1.0, 1.0, 1.0};
    const double fr = flux_fromm(u2, u2, a2, 0.5, 1);
    const double fl = flux_lxw(1.0, 2.0, 1.0, 0.5, 1.0);
    const double fb = flux_bw(u2, u2, a2, 0.5, 1);
    CHECK(fr == doctest::Approx(0.5 * (fl + fb)));
}

TEST_CASE("limiters and the limited centred flux") {
    CHECK(limiter_phi(Limiter::minbee, -1.0) == 0.0);
    CHECK(limiter_phi(Limiter::minbee, 0.5) == 0.5);
    CHECK(limiter_phi(Limiter::minbee, 3.0) == 1.0);
    CHECK(limiter_phi(Limiter::superbee, 0.25) == 0.5);
    CHECK(limiter_phi(Limiter::superbee, 1.5) == 1.5);
    CHECK(limiter_phi(Limiter::superbee, 4.0) == 2.0);

    // r = 1 (linear data) reduces FLIC to LxW; r < 0 reduces it to FORCE.
    const std::vector<double> lin{0.0, 1.0, 2.0, 3.0};
    const std::vector<double> a{1.0, 1.0, 1.0};
    CHECK(flux_flic(lin, lin, a, 0.5, 1, Limiter::minbee) ==
          doctest::Approx(flux_lxw(1.0, 2.0, 1.0, 0.5, 1.0)));
    const std::vector<double> peak{0.0, 1.0, 0.0, 1.0};
    CHECK(flux_flic(peak, peak, a, 0.5, 1, Limiter::minbee) ==
          doctest::Approx(flux_force(1.0, 0.0, 1.0, 0.0, 0.5, 1.0)));
}

TEST_CASE("scheme name parsing round-trips") {
    for (const char* s : {"upwind1", "lxw", "bw", "fromm", "force", "flic",
                          "lw-ccs", "bw-ccs", "flwbw-ccs", "sc-flwbw-ccs"}) {
        const SchemeId id = parse_scheme(s, "force");
        CHECK(scheme_name(id) == (std::string(s) == "lxw"  ? "lxw"
                                  : std::string(s) == "bw" ? "bw"
                                                           : s));
    }
    CHECK(parse_scheme("flwbw-ccs", "flic-superbee").limiter == Limiter::superbee);
    CHECK(parse_scheme("flwbw-ccs", "upwind1").ccs == CcsId::upwind1);
    CHECK_THROWS_AS(parse_scheme("nope", "force"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scheme("flwbw-ccs", "nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_scheme("sc-lxw", "force"), std::invalid_argument);
}

TEST_CASE("every scheme leaves constant data unchanged") {
    const Grid1D g(16, -1.0, 1.0);
    const auto model = builtin_model("burgers");
    const auto u = make_field(g, [](double) { return 0.7; });
    for (const char* s : {"upwind1", "lxw", "bw", "fromm", "force", "flic",
                          "lw-ccs", "bw-ccs", "flwbw-ccs"}) {
        const auto res = step_scalar(u, g, model, 0.4, parse_scheme(s, "force"));
        for (int i = 0; i < g.n_cells; ++i)
            CHECK(res.u[g.idx(i)] == doctest::Approx(0.7).epsilon(1e-14));
    }
}

TEST_CASE("unit-CFL advection is an exact shift for upwind and LxW") {
    const Grid1D g(16, -1.0, 1.0);
    const auto model = builtin_model("advection", 1.0);
    const auto u = make_field(g, [](double x) { return std::sin(M_PI * x); });
    for (const char* s : {"upwind1", "lxw"}) {
        const auto res = step_scalar(u, g, model, 1.0, parse_scheme(s, "force"));
        for (int i = 0; i < g.n_cells; ++i)
            CHECK(res.u[g.idx(i)] ==
                  doctest::Approx(u[g.idx(i) - 1]).epsilon(1e-13));
    }
}

TEST_CASE("forced bound sets reduce each hybrid to its pure scheme") {
    const Grid1D g(32, -1.0, 1.0);
    const auto model = builtin_model("advection", 1.0);
    const auto u = make_field(g, [](double x) { return std::sin(M_PI * x) + 0.3 * x * x; });
    const double lambda = 0.4;

    auto pure = [&](const char* s) {
        return interior(step_scalar(u, g, model, lambda, parse_scheme(s, "force")).u, g);
    };
    auto forced = [&](const char* s, BoundsMode m) {
        return interior(
            step_scalar(u, g, model, lambda, parse_scheme(s, "force"), nullptr, m).u,
            g);
    };

    const std::pair<const char*, const char*> pairs[] = {
        {"lw-ccs", "lxw"}, {"bw-ccs", "bw"}, {"flwbw-ccs", "fromm"}};
    for (const auto& [hybrid, base] : pairs) {
        const auto a = forced(hybrid, BoundsMode::accept_all);
        const auto b = pure(base);
        for (size_t i = 0; i < a.size(); ++i)
            CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
        const auto c = forced(hybrid, BoundsMode::reject_all);
        const auto d = pure("force");
        for (size_t i = 0; i < c.size(); ++i)
            CHECK(c[i] == doctest::Approx(d[i]).epsilon(1e-12));
    }
}

TEST_CASE("isolated peak routes to LxW and respects the local principle") {
    const Grid1D g(16, 0.0, 1.0);
    const auto model = builtin_model("advection", 1.0);
    auto u = make_field(g, [](double) { return 0.0; });
    u[g.idx(8)] = 1.0;
    fill_ghosts(u, g, BoundaryPolicy::periodic());
    const auto res = step_scalar(u, g, model, 0.5, parse_scheme("lw-ccs", "force"));
    // r = -1 at the peak, below kappa1(0.5) = -1/3: the LxW branch holds.
    CHECK(res.choices[8] == CellChoice::LXW);
    CHECK(res.lmp_violations == 0);
}

TEST_CASE("shock flags force the conservative fallback") {
    const Grid1D g(16, 0.0, 1.0);
    const auto model = builtin_model("advection", 1.0);
    const auto u = make_field(g, [](double x) { return std::sin(2 * M_PI * x); });
    std::vector<std::uint8_t> flags(16, 0);
    flags[2] = 1;  // cell in a smooth monotone stretch (r near 1)
    const auto res =
        step_scalar(u, g, model, 0.4, parse_scheme("flwbw-ccs", "force"), &flags);
    CHECK(res.choices[2] == CellChoice::CCS);
    const auto free =
        step_scalar(u, g, model, 0.4, parse_scheme("flwbw-ccs", "force"));
    CHECK(free.choices[2] != CellChoice::CCS);
}

TEST_CASE("max wave speed covers cells and interfaces") {
    const Grid1D g(8, -1.0, 1.0);
    const auto model = builtin_model("burgers");
    const auto u = make_field(g, [](double x) { return x; });
    CHECK(max_wave_speed(u, g, model) == doctest::Approx(1.0).epsilon(0.2));
}

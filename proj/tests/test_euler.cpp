#include <cmath>

#include "doctest.h"
#include "tvdlab/euler.hpp"

using namespace tvdlab;

namespace {

// Deterministic LCG so property sweeps are reproducible.
struct Lcg {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    double next(double lo, double hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        const double u = double(s >> 11) / 9007199254740992.0;
        return lo + (hi - lo) * u;
    }
};

}  // namespace

TEST_CASE("primitive conversion round trip and reference values") {
    const double g = 1.4;
    const Vec4 sod_left = conserved_from_primitive(1.0, 0.0, 0.0, 100000.0, g);
    CHECK(sod_left[3] == doctest::Approx(250000.0));
    const Primitive w = primitive_from_conserved(sod_left, g);
    CHECK(w.p == doctest::Approx(100000.0));
    CHECK(w.c == doctest::Approx(374.16573867739413).epsilon(1e-12));

    const Vec4 sod_right = conserved_from_primitive(0.125, 0.0, 0.0, 10000.0, g);
    CHECK(sod_right[3] == doctest::Approx(25000.0));

    Lcg rng;
    for (int it = 0; it < 200; ++it) {
        const double rho = rng.next(0.01, 5.0), u = rng.next(-3, 3),
                     v = rng.next(-3, 3), p = rng.next(0.01, 10.0);
        const Vec4 q = conserved_from_primitive(rho, u, v, p, g);
        const Primitive back = primitive_from_conserved(q, g);
        CHECK(back.rho == doctest::Approx(rho).epsilon(1e-13));
        CHECK(back.u == doctest::Approx(u).epsilon(1e-12));
        CHECK(back.v == doctest::Approx(v).epsilon(1e-12));
        CHECK(back.p == doctest::Approx(p).epsilon(1e-12));
    }

    CHECK_THROWS_AS(primitive_from_conserved({-1.0, 0, 0, 1.0}, g),
                    PositivityError);
    CHECK_THROWS_AS(primitive_from_conserved({1.0, 10.0, 0, 1.0}, g),
                    PositivityError);
}

TEST_CASE("flux splitting reconstructs the physical flux") {
    const double g = 1.4;
    Lcg rng;
    for (int it = 0; it < 2000; ++it) {
        const Vec4 q = conserved_from_primitive(
            rng.next(0.01, 5.0), rng.next(-4, 4), rng.next(-4, 4),
            rng.next(0.01, 10.0), g);
        Vec4 fp, fm;
        steger_warming_split(q, g, fp, fm);
        const Vec4 f = euler_flux(q, g);
        for (int j = 0; j < 4; ++j) {
            const double scale = std::max(1.0, std::fabs(f[j]));
            CHECK(std::fabs(fp[j] + fm[j] - f[j]) < 1e-10 * scale);
        }
    }
}

TEST_CASE("supersonic flow zeroes the counter-wind part") {
    const double g = 1.4;
    const Vec4 right = conserved_from_primitive(1.0, 3.0, 0.5, 1.0, g);  // u > c
    Vec4 fp, fm;
    steger_warming_split(right, g, fp, fm);
    for (int j = 0; j < 4; ++j) CHECK(fm[j] == 0.0);
    const Vec4 left = conserved_from_primitive(1.0, -3.0, 0.5, 1.0, g);
    steger_warming_split(left, g, fp, fm);
    for (int j = 0; j < 4; ++j) CHECK(fp[j] == 0.0);
}

TEST_CASE("corrected system wave speeds stay in the envelope") {
    const double g = 1.4;
    const Vec4 a = conserved_from_primitive(1.0, 0.0, 0.0, 100000.0, g);
    for (int j = 0; j < 4; ++j) {
        const double s = system_wave_speed(a, a, j, g);
        const double c = 374.16573867739413;
        CHECK(std::fabs(s) <= c + 1e-9);
    }
    // Strong jump: secants clamp to sigma_max.
    const Vec4 b = conserved_from_primitive(0.01, 0.0, 0.0, 1000.0, g);
    double smax = 0.0;
    for (const auto& q : {a, b}) {
        const Primitive w = primitive_from_conserved(q, g);
        smax = std::max(smax, std::fabs(w.u) + w.c);
    }
    for (int j = 0; j < 4; ++j)
        CHECK(std::fabs(system_wave_speed(a, b, j, g)) <= smax + 1e-9);
}

TEST_CASE("uniform states are fixed points of every stepper") {
    const Grid1D grid(32, 0.0, 1.0);
    EulerTube tube = make_tube(grid, 1.4, 0.5, {1.0, 0.3, 2.0}, {1.0, 0.3, 2.0});
    const auto before = tube.q;
    step_euler_1d(tube, 0.1 / tube.max_speed() / grid.dx() * grid.dx(),
                  parse_scheme("flwbw-ccs", "force"));
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(tube.q[grid.idx(i)][j] ==
                  doctest::Approx(before[grid.idx(i)][j]).epsilon(1e-13));
}

TEST_CASE("sod initial data and a few steps stay positive") {
    const Grid1D grid(100, -10.0, 10.0);
    EulerTube tube =
        make_tube(grid, 1.4, 0.0, {1.0, 0.0, 100000.0}, {0.125, 0.0, 10000.0});
    CHECK(tube.max_speed() == doctest::Approx(374.16573867739413).epsilon(1e-12));
    const SchemeId scheme = parse_scheme("flwbw-ccs", "flic");
    for (int s = 0; s < 5; ++s) {
        const double dt = 0.5 * grid.dx() / tube.max_speed();
        step_euler_1d(tube, dt / grid.dx(), scheme);
    }
    for (int i = 0; i < 100; ++i) {
        const Primitive w = primitive_from_conserved(tube.q[grid.idx(i)], 1.4);
        CHECK(w.rho > 0.0);
        CHECK(w.p > 0.0);
    }
}

TEST_CASE("y-uniform 2D data reduces to stacked 1D sweeps") {
    const double g = 1.4;
    EulerField2D f{Grid2D(24, 8, 0.0, 1.0, 0.0, 1.0), g, {}};
    f.q.assign(f.grid.total(), Vec4{1, 0, 0, 2.5});
    std::vector<Vec4> line(24 + 2 * kGhostWidth);
    for (int ix = 0; ix < 24; ++ix) {
        const double x = f.grid.cx(ix);
        const Vec4 q = conserved_from_primitive(x < 0.5 ? 1.0 : 0.5, 0.1, 0.0,
                                                x < 0.5 ? 1.0 : 0.4, g);
        line[ix + kGhostWidth] = q;
        for (int iy = 0; iy < 8; ++iy) f.q[f.grid.idx(ix, iy)] = q;
    }
    fill_euler_ghosts(line, 24, kGhostWidth);

    const SchemeId scheme = parse_scheme("flwbw-ccs", "force");
    const double dt = 0.25 * f.grid.dx() / f.max_speed_x();
    step_euler_2d_strang(f, dt, scheme);

    // Equivalent 1D evolution: two half steps along x.
    auto l1 = step_euler_line(line, 24, kGhostWidth, g, 0.5 * dt / f.grid.dx(),
                              scheme);
    fill_euler_ghosts(l1, 24, kGhostWidth);
    auto l2 = step_euler_line(l1, 24, kGhostWidth, g, 0.5 * dt / f.grid.dx(),
                              scheme);
    for (int ix = 0; ix < 24; ++ix)
        for (int iy = 0; iy < 8; ++iy)
            for (int j = 0; j < 4; ++j)
                CHECK(f.q[f.grid.idx(ix, iy)][j] ==
                      doctest::Approx(l2[ix + kGhostWidth][j]).epsilon(1e-10));
}

TEST_CASE("riemann configuration tables") {
    const auto c1 = riemann_config(1);
    CHECK(c1.rho[2] == doctest::Approx(0.1072));
    CHECK(c1.v[2] == doctest::Approx(-1.4045));
    CHECK(c1.t_final == doctest::Approx(0.2));

    const auto c5 = riemann_config(5);
    for (int k = 0; k < 4; ++k) CHECK(c5.p[k] == 1.0);
    CHECK(c5.rho[1] == 2.0);
    CHECK(c5.rho[3] == 3.0);

    const auto c12 = riemann_config(12);
    CHECK(c12.rho[1] == doctest::Approx(1.0222));
    CHECK(c12.u[1] == doctest::Approx(-0.6179));

    CHECK_THROWS_AS(riemann_config(0), std::out_of_range);
    CHECK_THROWS_AS(riemann_config(13), std::out_of_range);
}

TEST_CASE("quadrant layout of the 2D field") {
    const auto cfg = riemann_config(5);
    const auto f = make_riemann_field(cfg, 10, 10);
    auto rho_at = [&](int ix, int iy) {
        return primitive_from_conserved(f.q[f.grid.idx(ix, iy)], f.gamma).rho;
    };
    CHECK(rho_at(7, 7) == doctest::Approx(cfg.rho[0]));  // NE
    CHECK(rho_at(2, 7) == doctest::Approx(cfg.rho[1]));  // NW
    CHECK(rho_at(2, 2) == doctest::Approx(cfg.rho[2]));  // SW
    CHECK(rho_at(7, 2) == doctest::Approx(cfg.rho[3]));  // SE
}

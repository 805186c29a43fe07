#include <cmath>
#include <limits>

#include "doctest.h"
#include "tvdlab/tvd_core.hpp"

using namespace tvdlab;

TEST_CASE("interface speed is the secant, derivative when degenerate") {
    const auto bur = builtin_model("burgers");
    CHECK(interface_speed(1.0, 3.0, bur) == doctest::Approx(2.0));  // (u+v)/2
    CHECK(interface_speed(2.0, 2.0, bur) == doctest::Approx(2.0));
    const auto adv = builtin_model("advection", -1.5);
    CHECK(interface_speed(0.0, 1.0, adv) == doctest::Approx(-1.5));
}

TEST_CASE("speed sign split") {
    CHECK(split_speed(2.0).plus == 2.0);
    CHECK(split_speed(2.0).minus == 0.0);
    CHECK(split_speed(-3.0).plus == 0.0);
    CHECK(split_speed(-3.0).minus == -3.0);
    CHECK(split_speed(0.0).plus == 0.0);
    CHECK(split_speed(0.0).minus == 0.0);
}

TEST_CASE("smoothness ratio in both wind directions") {
    const std::vector<double> sp{1.0, 1.0};
    const std::vector<double> fd{2.0, 1.0};
    const FamilyLine plus{sp, fd};
    // r+ = [(1-0.5)*2] / [(1-0.5)*1] = 2
    CHECK(smoothness_ratio(plus, 0.5, 1, WaveSign::plus) == doctest::Approx(2.0));

    const std::vector<double> sm{-1.0, -1.0};
    const FamilyLine minus{sm, fd};
    // r- = [(1-0.5)*1] / [(1-0.5)*2] = 0.5
    CHECK(smoothness_ratio(minus, 0.5, 1, WaveSign::minus) == doctest::Approx(0.5));
}

TEST_CASE("degenerate ratios map to signed infinity and one") {
    const std::vector<double> sp{1.0, 1.0};
    const std::vector<double> up{3.0, 0.0};   // flat ahead
    CHECK(std::isinf(smoothness_ratio({sp, up}, 0.5, 1, WaveSign::plus)));
    CHECK(smoothness_ratio({sp, up}, 0.5, 1, WaveSign::plus) > 0.0);
    const std::vector<double> dn{-3.0, 0.0};
    CHECK(smoothness_ratio({sp, dn}, 0.5, 1, WaveSign::plus) < 0.0);
    const std::vector<double> zz{0.0, 0.0};
    CHECK(smoothness_ratio({sp, zz}, 0.5, 1, WaveSign::plus) == 1.0);
}

TEST_CASE("bound pairs at reference CFL numbers") {
    const auto b = bounds_lxw(0.5);
    CHECK(b.kappa1 == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(b.gamma1 == doctest::Approx(0.2).epsilon(1e-15));

    const auto bb = bounds_bw(0.5);
    REQUIRE(bb.has_value());
    CHECK(bb->kappa2 == doctest::Approx(-3.0).epsilon(1e-15));
    CHECK(bb->gamma2 == doctest::Approx(5.0).epsilon(1e-15));

    const auto unit = bounds_lxw(1.0);
    CHECK(unit.kappa1 == 0.0);
    CHECK(unit.gamma1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    REQUIRE(bounds_bw(1.0).has_value());
    CHECK(std::isinf(bounds_bw(1.0)->gamma2));

    CHECK(!bounds_bw(0.0).has_value());
    // Sign symmetry.
    CHECK(bounds_lxw(-0.5).kappa1 == bounds_lxw(0.5).kappa1);
    CHECK(bounds_bw(-0.5)->gamma2 == bounds_bw(0.5)->gamma2);
}

TEST_CASE("bounds are monotone over the CFL interval") {
    double prev_k1 = bounds_lxw(1e-6).kappa1, prev_g1 = bounds_lxw(1e-6).gamma1;
    double prev_k2 = bounds_bw(1e-6)->kappa2, prev_g2 = bounds_bw(1e-6)->gamma2;
    for (int i = 1; i <= 50; ++i) {
        const double nu = i / 50.0 - 1e-9;
        const auto lb = bounds_lxw(nu);
        const auto bb = bounds_bw(nu);
        CHECK(lb.kappa1 >= prev_k1);  // widening toward 0-
        CHECK(lb.gamma1 >= prev_g1);
        CHECK(bb->kappa2 >= prev_k2);
        CHECK(bb->gamma2 >= prev_g2);
        prev_k1 = lb.kappa1;
        prev_g1 = lb.gamma1;
        prev_k2 = bb->kappa2;
        prev_g2 = bb->gamma2;
    }
}

TEST_CASE("local maximum principle hull check") {
    CHECK(lmp_check(0.5, 0.0, 1.0));
    CHECK(lmp_check(0.0, 0.0, 1.0));
    CHECK(lmp_check(1.0, 1.0, 0.0));
    CHECK(!lmp_check(1.1, 0.0, 1.0));
    CHECK(!lmp_check(-0.1, 0.0, 1.0));
    CHECK(lmp_check(1.0 + 1e-14, 0.0, 1.0));  // tolerance band
}

#include "tvdlab/scalar_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tvdlab {

double wrap_periodic(double x, double a, double b) {
    const double L = b - a;
    double y = std::fmod(x - a, L);
    if (y < 0.0) y += L;
    return a + y;
}

ScalarModel builtin_model(const std::string& name, double param) {
    if (name == "advection") {
        const double a = param;
        return {"advection",
                [a](double u) { return a * u; },
                [a](double) { return a; },
                {}};
    }
    if (name == "burgers") {
        return {"burgers",
                [](double u) { return 0.5 * u * u; },
                [](double u) { return u; },
                {0.0}};
    }
    if (name == "buckley") {
        const double al = param;
        auto den = [al](double u) { return u * u + al * (1.0 - u) * (1.0 - u); };
        return {"buckley",
                [den](double u) { return u * u / den(u); },
                [al, den](double u) {
                    const double d = den(u);
                    return 2.0 * al * u * (1.0 - u) / (d * d);
                },
                {0.0, 1.0}};
    }
    throw std::out_of_range("builtin_model: unknown model '" + name + "'");
}

namespace {

double harten_profile(double x) {
    // Contiguous pieces; the joint at x=-0.5 follows the plotted shape.
    const double s = x - 0.5;
    if (x <= -0.5) return 2.0 * x + 2.0 - std::sin(3.0 * M_PI * s) / 6.0;
    if (x <= 1.0 / 6.0) return (0.5 - x) * std::sin(1.5 * M_PI * s * s);
    if (x <= 5.0 / 6.0) return std::fabs(std::sin(2.0 * M_PI * s));
    return 2.0 * x - 2.0 - std::sin(3.0 * M_PI * s) / 6.0;
}

}  // namespace

InitialCondition builtin_ic(const std::string& name) {
    using BK = BoundaryPolicy::Kind;
    if (name == "lin-ic1")
        return {name, [](double x) { return std::sin(M_PI * x); }, -1.0, 1.0,
                std::nullopt, BK::periodic};
    if (name == "lin-ic2")
        return {name, [](double x) { return std::pow(std::sin(M_PI * x), 4); },
                0.0, 1.0, std::nullopt, BK::periodic};
    if (name == "lin-ic3")
        return {name,
                [](double x) {
                    return std::fabs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0;
                },
                -1.0, 1.0, std::nullopt, BK::periodic};
    if (name == "harten")
        return {name, harten_profile, -1.0, 1.0, std::nullopt, BK::periodic};
    if (name == "burgers-ic2")
        return {name, [](double x) { return std::fabs(x) <= 1.0 / 3.0 ? 1.0 : 0.0; },
                -1.0, 1.0, std::nullopt, BK::periodic};
    if (name == "burgers-ic2a")
        return {name,
                [](double x) { return 0.1 + std::pow(std::sin(M_PI * x), 4); },
                0.0, 1.0, 0.27803225, BK::periodic};
    if (name == "burgers-ic2b")
        return {name,
                [](double x) { return 0.1 + std::exp(-std::pow(x, 4)); },
                -2.0, 3.0, 0.65669683, BK::periodic};
    if (name == "burgers-ic2c")
        return {name,
                [](double x) { return 0.25 * (1.0 + std::sin(M_PI * x)); },
                -1.0, 1.0, 4.0 / M_PI, BK::periodic};
    if (name == "buckley-1")
        return {name, [](double x) { return x < 0.0 ? 1.0 : 0.0; },
                -1.0, 2.0, std::nullopt, BK::outflow};
    if (name == "buckley-2")
        return {name,
                [](double x) { return (x >= -0.5 && x <= 0.0) ? 1.0 : 0.0; },
                -1.0, 1.5, std::nullopt, BK::outflow};
    throw std::out_of_range("builtin_ic: unknown initial condition '" + name + "'");
}

std::vector<std::string> builtin_ic_names() {
    return {"lin-ic1",      "lin-ic2",      "lin-ic3",      "harten",
            "burgers-ic2",  "burgers-ic2a", "burgers-ic2b", "burgers-ic2c",
            "buckley-1",    "buckley-2"};
}

namespace {

double deriv(const InitialCondition& ic, double x) {
    const double h = 1e-7;
    return (ic.eval(x + h) - ic.eval(x - h)) / (2.0 * h);
}

}  // namespace

std::optional<double> breaking_time(const InitialCondition& ic, int sample_n) {
    // Dense scan for the most negative slope, then golden-section refine.
    const double a = ic.a, b = ic.b;
    const double h = (b - a) / sample_n;
    double best = 0.0, xbest = a;
    for (int i = 1; i < sample_n; ++i) {
        const double x = a + i * h;
        const double d = deriv(ic, x);
        if (d < best) { best = d; xbest = x; }
    }
    if (best >= 0.0) return std::nullopt;

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = std::max(a, xbest - 2.0 * h), hi = std::min(b, xbest + 2.0 * h);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = deriv(ic, x1), f2 = deriv(ic, x2);
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = deriv(ic, x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = deriv(ic, x2);
        }
    }
    const double dmin = std::min(f1, f2);
    if (dmin >= 0.0) return std::nullopt;
    return -1.0 / dmin;
}

double exact_solution(const ScalarModel& model, const InitialCondition& ic,
                      double x, double t) {
    auto u0 = [&](double xi) {
        return ic.eval(ic.default_boundary == BoundaryPolicy::Kind::periodic
                           ? wrap_periodic(xi, ic.a, ic.b)
                           : std::clamp(xi, ic.a, ic.b));
    };
    if (model.name == "advection") {
        const double a = model.flux_deriv(0.0);
        return u0(x - a * t);
    }
    if (model.name != "burgers")
        throw std::domain_error("exact_solution: no oracle for model " + model.name);
    if (t == 0.0) return u0(x);
    const auto tb = breaking_time(ic);
    if (tb && t >= *tb)
        throw std::domain_error("exact_solution: Burgers post-shock time unsupported");

    // u = u0(x - u t): bracket by the u0 range, bisect, then polish.
    double umin = ic.eval(ic.a), umax = umin;
    for (int i = 0; i <= 4000; ++i) {
        const double v = ic.eval(ic.a + (ic.b - ic.a) * i / 4000.0);
        umin = std::min(umin, v);
        umax = std::max(umax, v);
    }
    auto g = [&](double u) { return u - u0(x - u * t); };
    double lo = umin - 1e-12, hi = umax + 1e-12;
    double glo = g(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi), gm = g(mid);
        if ((gm < 0.0) == (glo < 0.0)) { lo = mid; glo = gm; }
        else hi = mid;
        if (hi - lo < 1e-14 * (1.0 + std::fabs(hi))) break;
    }
    double u = 0.5 * (lo + hi);
    for (int it = 0; it < 8; ++it) {  // Newton polish, residual target 1e-12
        const double h = 1e-7;
        const double dg = 1.0 + t * (u0(x - (u - h) * t) - u0(x - (u + h) * t)) / (2.0 * h);
        if (std::fabs(dg) < 1e-12) break;
        const double step = g(u) / dg;
        const double un = u - step;
        if (un < lo - 1e-6 || un > hi + 1e-6) break;
        u = un;
        if (std::fabs(g(u)) < 1e-13) break;
    }
    return u;
}

}  // namespace tvdlab

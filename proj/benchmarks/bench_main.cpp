#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "tvdlab/euler.hpp"
#include "tvdlab/scalar_scheme.hpp"
#include "tvdlab/shock_sensor.hpp"

using namespace tvdlab;

namespace {

std::vector<double> sine_field(const Grid1D& g) {
    std::vector<double> u(g.total(), 0.0);
    for (int i = 0; i < g.n_cells; ++i)
        u[g.idx(i)] = std::sin(M_PI * g.center(i));
    fill_ghosts(u, g, BoundaryPolicy::periodic());
    return u;
}

void BM_ScalarHybridStep(benchmark::State& state) {
    const Grid1D g(int(state.range(0)), -1.0, 1.0);
    const auto model = builtin_model("burgers");
    const auto u = sine_field(g);
    const SchemeId scheme = parse_scheme("flwbw-ccs", "force");
    for (auto _ : state) {
        auto res = step_scalar(u, g, model, 0.4, scheme);
        benchmark::DoNotOptimize(res.u.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScalarHybridStep)->Arg(100)->Arg(1000)->Arg(10000);

void BM_EulerLineStep(benchmark::State& state) {
    const int n = int(state.range(0));
    const Grid1D g(n, -10.0, 10.0);
    EulerTube tube =
        make_tube(g, 1.4, 0.0, {1.0, 0.0, 100000.0}, {0.125, 0.0, 10000.0});
    const SchemeId scheme = parse_scheme("flwbw-ccs", "force");
    const double lambda = 0.5 / tube.max_speed();
    for (auto _ : state) {
        auto q = step_euler_line(tube.q, n, g.ghost, 1.4, lambda, scheme);
        benchmark::DoNotOptimize(q.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EulerLineStep)->Arg(100)->Arg(1000);

void BM_ShockSensor(benchmark::State& state) {
    const int n = int(state.range(0));
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i)
        u[i] = std::sin(2.0 * M_PI * i / n) + (i > n / 2 ? 1.0 : 0.0);
    SensorParams params;
    for (auto _ : state) {
        auto flags = shock_switch(u, 1.0 / n, params, true);
        benchmark::DoNotOptimize(flags.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_ShockSensor)->Arg(100)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();

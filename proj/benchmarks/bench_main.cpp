#include <benchmark/benchmark.h>

#include "photonfield/coupling.hpp"
#include "photonfield/spectrum.hpp"
#include "photonfield/thermo.hpp"

using namespace photonfield;

static void BM_radial_transform(benchmark::State& state) {
    const CutoffSpec spec{1.0, Taper::smooth_bump, 0.5};
    const double r = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_h(spec, r));
}
BENCHMARK(BM_radial_transform)->Arg(1)->Arg(50)->Arg(500);

static void BM_radial_transform_sharp(benchmark::State& state) {
    const CutoffSpec spec{1.0, Taper::sharp, 0.5};
    const double r = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(compute_h(spec, r));
}
BENCHMARK(BM_radial_transform_sharp)->Arg(50)->Arg(500);

static void BM_h_polarized(benchmark::State& state) {
    const CutoffSpec spec{1.0, Taper::smooth_bump, 0.5};
    const double r = static_cast<double>(state.range(0));
    const Vec3 y = r * Vec3(0, 1, 1).normalized();
    for (auto _ : state) benchmark::DoNotOptimize(compute_h_polarized(spec, 1, 1, y));
}
BENCHMARK(BM_h_polarized)->Arg(2)->Arg(20);

static void BM_field_spectrum(benchmark::State& state) {
    const auto lattice = build_lattice(2.0 * M_PI, 1, 1.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            field_spectrum(lattice, Channels::three, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_field_spectrum)->Arg(2)->Arg(4);

static void BM_finite_box_density(benchmark::State& state) {
    const double L = 2.0 * M_PI * static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(finite_box_density(L, 1.0));
}
BENCHMARK(BM_finite_box_density)->Arg(2)->Arg(8);

BENCHMARK_MAIN();

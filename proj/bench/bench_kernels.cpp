// Serial reference against OpenMP for the three hot kernels.
#include <benchmark/benchmark.h>

#include "kricker/moves.hpp"
#include "kricker/pbw.hpp"

#include <string>

using namespace kricker;

namespace {

TangleProgram corpus(const std::string& name) { return load_program(std::string(KRICKER_CORPUS_DIR) + "/" + name + ".pres"); }

void lift(benchmark::State& state, const char* name, bool parallel) {
    TangleProgram p = corpus(name);
    ComponentMap c = trace_components(p);
    FunctorData data = functor_data(3);
    for (auto _ : state) benchmark::DoNotOptimize(z_circle(p, c, data, parallel));
}

void chi_round(benchmark::State& state, bool parallel) {
    Series beaded = omega(lift_and_split(corpus("fig8"), 2)).series;
    for (auto _ : state) {
        ChiInverse inv(parallel);
        benchmark::DoNotOptimize(inv(chi(beaded, parallel)));
    }
}

void reduce(benchmark::State& state, bool parallel) {
    ColoredValue v = z_tilde(corpus("trefoil"), 2);
    for (auto _ : state) {
        Reducer r(v.space, {}, parallel);
        benchmark::DoNotOptimize(r.reduce(v.series));
    }
}

}  // namespace

BENCHMARK_CAPTURE(lift, trefoil_serial, "trefoil", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lift, trefoil_omp, "trefoil", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lift, fig8_serial, "fig8", false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(lift, fig8_omp, "fig8", true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(chi_round, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(chi_round, omp, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(reduce, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(reduce, omp, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

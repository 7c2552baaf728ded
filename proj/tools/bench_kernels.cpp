#include <benchmark/benchmark.h>

#include "smallminors/generators.hpp"
#include "smallminors/oracle.hpp"

using namespace smallminors;

namespace {

const Graph &girth_input() {
    static const Graph g = random_gnm(4000, 6000, 17);
    return g;
}

const Graph &oracle_input() {
    static const Graph g = planar_4plus_eps_gadget(2).graph();
    return g;
}

void girth_serial(benchmark::State &st) {
    for (auto _ : st) benchmark::DoNotOptimize(girth_exact(girth_input()));
}

void girth_parallel(benchmark::State &st) {
    for (auto _ : st) benchmark::DoNotOptimize(girth_exact_parallel(girth_input()));
}

void oracle_serial(benchmark::State &st) {
    const int cap = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(min_kt_model(oracle_input(), 4, cap));
}

void oracle_parallel(benchmark::State &st) {
    const int cap = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(min_kt_model_parallel(oracle_input(), 4, cap));
}

void sweep_serial(benchmark::State &st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_face_inequality_surface(Rational(120), 12, 60));
}

void sweep_parallel(benchmark::State &st) {
    for (auto _ : st) benchmark::DoNotOptimize(check_face_inequality_surface_parallel(Rational(120), 12, 60));
}

}  // namespace

BENCHMARK(girth_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(girth_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(oracle_serial)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_parallel)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(sweep_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

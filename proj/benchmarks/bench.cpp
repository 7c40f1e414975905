#include <benchmark/benchmark.h>

#include "k3fm/decompose.hpp"
#include "k3fm/oracle.hpp"

using namespace k3fm;

namespace {

void bm_admissible_actions(benchmark::State& state) {
    Int d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(admissible_actions(d, 1));
}
BENCHMARK(bm_admissible_actions)->Arg(13)->Arg(105)->Arg(1001);

void bm_transcendental_reduced(benchmark::State& state) {
    K3Lattice k = k3_lattice(Model::reduced);
    IntVec cls = class_of(k, Family::L, 2, 7, 2);
    for (auto _ : state) benchmark::DoNotOptimize(transcendental(k, cls));
}
BENCHMARK(bm_transcendental_reduced);

void bm_transcendental_full(benchmark::State& state) {
    K3Lattice k = k3_lattice(Model::full);
    IntVec cls = class_of(k, Family::L, 2, 7, 2);
    for (auto _ : state) benchmark::DoNotOptimize(transcendental(k, cls));
}
BENCHMARK(bm_transcendental_full);

void bm_exact_rho_action(benchmark::State& state) {
    RSL rsl{2, 7, 2, 1, -3, 1};
    for (auto _ : state) benchmark::DoNotOptimize(exact_rho_action(rsl));
}
BENCHMARK(bm_exact_rho_action);

void bm_decompose(benchmark::State& state) {
    Int d = state.range(0);
    auto acts = admissible_actions(d, 1);
    for (auto _ : state)
        for (const Action& a : acts) benchmark::DoNotOptimize(decompose(d, a));
}
BENCHMARK(bm_decompose)->Arg(10)->Arg(40);

void bm_solve_congruence(benchmark::State& state) {
    Int d = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_congruence(1, 4 * d, true));
}
BENCHMARK(bm_solve_congruence)->Arg(300)->Arg(3000);

}  // namespace

BENCHMARK_MAIN();

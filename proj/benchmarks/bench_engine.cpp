#include <benchmark/benchmark.h>

#include <clusterforge/exchange_graph.hpp>
#include <clusterforge/ice_quiver.hpp>
#include <clusterforge/invariants.hpp>
#include <clusterforge/quiver_rep.hpp>
#include <clusterforge/seed.hpp>

using namespace clusterforge;

namespace {

ExchangeMatrix a3() {
    return make_principal_part({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
}

ExchangeMatrix a4() {
    return make_principal_part(
        {{0, 1, -1, 0}, {-1, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

// the rank 3 cycle 3 -> 1, 1 => 2, 2 -> 3
ExchangeMatrix cycle3() {
    return quiver_to_matrix(make_quiver(3, 3, {{3, 1}, {1, 2}, {1, 2}, {2, 3}}));
}

void BM_matrix_mutate(benchmark::State& state) {
    ExchangeMatrix b = principal_extend(cycle3());
    for (auto _ : state) {
        // forward and back: the workload is steady across iterations
        benchmark::DoNotOptimize(matrix_mutate(matrix_mutate(b, 1), 1));
    }
}
BENCHMARK(BM_matrix_mutate);

void BM_seed_mutate(benchmark::State& state) {
    Seed s = apply_sequence(initial_seed(principal_extend(cycle3())), {3, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(seed_mutate(s, 1));
    }
}
BENCHMARK(BM_seed_mutate);

void BM_traverse(benchmark::State& state) {
    Seed root =
        initial_seed(principal_extend(state.range(0) == 3 ? a3() : a4()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(traverse_exchange_graph(root, 1000, 1));
    }
}
BENCHMARK(BM_traverse)->Arg(3)->Arg(4);

void BM_normal_form(benchmark::State& state) {
    ExchangeMatrix root = principal_extend(cycle3());
    LaurentPoly z = apply_sequence(initial_seed(root), {3, 2, 1}).cluster[0];
    for (auto _ : state) {
        benchmark::DoNotOptimize(extract_normal_form(z, root));
    }
}
BENCHMARK(BM_normal_form);

void BM_euler_char(benchmark::State& state) {
    IceQuiver q = make_quiver(2, 2, {{1, 2}});
    QuiverRep rep{q, {2, 1}, {{{1, 0}}}};
    std::vector<int> e{1, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grassmannian_euler_char(rep, e));
    }
}
BENCHMARK(BM_euler_char);

void BM_check_denominators(benchmark::State& state) {
    Seed root = initial_seed(principal_extend(cycle3()));
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_conjecture("7.17", root));
    }
}
BENCHMARK(BM_check_denominators);

} // namespace

BENCHMARK_MAIN();

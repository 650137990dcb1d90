#include "nodal/appendix_case.hpp"
#include "nodal/gw_oracle.hpp"
#include "nodal/tensor_oracle.hpp"

#include <benchmark/benchmark.h>

using namespace nodal;

static void BM_DiagonalInsertionOrthogonal(benchmark::State& state) {
    BilinearSpace sp(Flavor::orthogonal(static_cast<int>(state.range(1))));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_insertion_matrix(n, sp));
}
BENCHMARK(BM_DiagonalInsertionOrthogonal)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_DiagonalInsertionSymplectic(benchmark::State& state) {
    BilinearSpace sp(Flavor::symplectic(static_cast<int>(state.range(1))));
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(diagonal_insertion_matrix(n, sp));
}
BENCHMARK(BM_DiagonalInsertionSymplectic)->Args({2, 2})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_Kontsevich(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kontsevich_table(d));
}
BENCHMARK(BM_Kontsevich)->Arg(8)->Arg(20)->Arg(40);

static void BM_AppendixReport(benchmark::State& state) {
    auto table = OracleTable::bundled();
    for (auto _ : state) benchmark::DoNotOptimize(assemble_report(table));
}
BENCHMARK(BM_AppendixReport)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

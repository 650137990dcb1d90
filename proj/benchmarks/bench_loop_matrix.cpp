#include "nodal/loop_matrix.hpp"
#include "nodal/pairings.hpp"

#include <benchmark/benchmark.h>

using namespace nodal;

static void BM_EnumeratePairings(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairings(n));
}
BENCHMARK(BM_EnumeratePairings)->DenseRange(2, 5);

static void BM_BuildLoopMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_loop_matrix(n, Rational(7, 3)));
}
BENCHMARK(BM_BuildLoopMatrix)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Eigenspaces(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eigenspace_decomposition(n));
}
BENCHMARK(BM_Eigenspaces)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_RestrictedInverse(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SpectralProjector proj(n);
    PairingVector v = PairingVector::zero(n);
    for (std::size_t i = 0; i < v.coords.size(); ++i) v.coords[i] = static_cast<long>(i % 5) + 1;
    const Flavor fl = Flavor::orthogonal(n);
    auto data = apply_loop_matrix(n, fl.specialization(), v);
    for (auto _ : state) benchmark::DoNotOptimize(restricted_inverse_apply(proj, fl, data));
}
BENCHMARK(BM_RestrictedInverse)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

#include "qfrob/certificate.hpp"
#include "qfrob/hom.hpp"
#include "qfrob/matfac.hpp"
#include "qfrob/pushforward.hpp"

#include <benchmark/benchmark.h>

using namespace qfrob;

static void BM_BuildPhiPsi(benchmark::State& state) {
  const PrimeField F(3);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_phi_psi(F, m));
}
BENCHMARK(BM_BuildPhiPsi)->DenseRange(2, 6, 2);

// F_* O(j) on Q_4 at p = 3, 5.
static void BM_DecomposeLine(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const int j = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(line(2, j), 1, p));
}
BENCHMARK(BM_DecomposeLine)->Args({3, 0})->Args({3, -2})->Args({5, -2})->Unit(benchmark::kMillisecond);

static void BM_DecomposeComposed(benchmark::State& state) {
  const int e = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(line(2, 0), e, 3));
}
BENCHMARK(BM_DecomposeComposed)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_HomExtTable(benchmark::State& state) {
  const PrimeField F(static_cast<std::uint32_t>(state.range(0)));
  const auto table = spinor_table(2);
  for (auto _ : state)
    for (const auto& e : table) benchmark::DoNotOptimize(computed_hom_ext(F, e.src, e.tgt, e.i));
}
BENCHMARK(BM_HomExtTable)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_MultiplicityMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(spinor_multiplicity_matrix(-2, 3, 2));
}
BENCHMARK(BM_MultiplicityMatrix)->Unit(benchmark::kMillisecond);

static void BM_Certify(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const int e_max = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(certify_non_d_affine(p, 2, e_max));
}
BENCHMARK(BM_Certify)->Args({3, 4})->Args({5, 3})->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();

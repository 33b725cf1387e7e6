#include <benchmark/benchmark.h>

#include "hsca/kernels.hpp"
#include "hsca/operators.hpp"
#include "hsca/verifier.hpp"

namespace {

using namespace hsca;

void BM_GeometricProduct(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  SplitMix64 rng(1);
  Multivector a(m), b(m);
  for (int t = 0; t < 6; ++t) {
    a.add_term(static_cast<BladeMask>(rng.below(std::uint64_t{1} << m)),
               ExactScalar(rng.small_rational()));
    b.add_term(static_cast<BladeMask>(rng.below(std::uint64_t{1} << m)),
               ExactScalar(rng.small_rational()));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_product(a, b));
  }
}
BENCHMARK(BM_GeometricProduct)->Arg(3)->Arg(5)->Arg(8);

void BM_ProjectPlus(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  SplitMix64 rng(2);
  const CliffPoly h = random_h_field(m, 2, 0, rng).poly;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_plus(h));
  }
}
BENCHMARK(BM_ProjectPlus)->Arg(3)->Arg(5);

void BM_OperatorEquality(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const SpinContext ctx{m, 1};
  SplitMix64 rng(3);
  const CliffPoly f = random_h_field(m, 1, 4, rng).poly;
  for (auto _ : state) {
    const CliffPoly direct = bosonic_laplacian_direct(f, ctx);
    const CliffPoly composed =
        bosonic_laplacian_composed(f, ctx, CompositionLine::First);
    benchmark::DoNotOptimize(direct == composed);
  }
}
BENCHMARK(BM_OperatorEquality)->Arg(3)->Arg(5);

void BM_StokesPairing(benchmark::State& state) {
  const int m = 3;
  const SpinContext ctx{m, 1};
  SplitMix64 rng(4);
  const HPair f = almansi_split(random_h_field(m, 1, 2, rng).poly);
  const HPair g = almansi_split(random_h_field(m, 1, 2, rng).poly);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stokes_pairing(f, g, ctx));
  }
}
BENCHMARK(BM_StokesPairing);

void BM_AnnihilationResidual(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::vector<double> x{0.8, -0.3, 0.4};
  const std::vector<double> v{0.0, 0.6, 0.8};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        annihilation_residual(FundamentalKind::Bosonic, 3, k, x, v));
  }
}
BENCHMARK(BM_AnnihilationResidual)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();

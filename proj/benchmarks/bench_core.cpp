#include <benchmark/benchmark.h>

#include "tleaf/bivector.hpp"
#include "tleaf/cartanops.hpp"
#include "tleaf/classes.hpp"
#include "tleaf/sampling.hpp"

using namespace tleaf;

static void BM_EvaluateBivector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto real = build_sl_realization(n);
  const auto theta = Automorphism::identity(real);
  Rng rng(1);
  const CMatrix g = random_sl(n + 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_bivector(g, theta, real));
}
BENCHMARK(BM_EvaluateBivector)->DenseRange(1, 4);

static void BM_RRoute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto real = build_sl_realization(n);
  const auto theta = Automorphism::outer(real);
  Rng rng(2);
  const CMatrix g = random_sl(n + 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_bivector_from_r_matrix(g, theta, real));
}
BENCHMARK(BM_RRoute)->DenseRange(1, 3);

static void BM_BruhatLeq(benchmark::State& state) {
  const WeylGroup group(RootDatum::type_a(static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& u = group[i % group.order()];
    const auto& w = group[(i * 7 + 3) % group.order()];
    benchmark::DoNotOptimize(group.bruhat_leq(u, w));
    ++i;
  }
}
BENCHMARK(BM_BruhatLeq)->Arg(3)->Arg(4)->Arg(5);

static void BM_DimKer(benchmark::State& state) {
  const WeylGroup d4(RootDatum::d4());
  const auto tri = d4_triality();
  std::size_t i = 0;
  for (auto _ : state) {
    const auto a = w_theta(d4[i % d4.order()], tri);
    benchmark::DoNotOptimize(dim_ker(CartanOperator::identity(4) + a));
    ++i;
  }
}
BENCHMARK(BM_DimKer);

static void BM_CellRecovery(benchmark::State& state) {
  const WeylGroup group(RootDatum::type_a(3));
  Rng rng(3);
  const auto s = sample_in_cell(group.longest(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(&bruhat_cell_of(s.g, group));
}
BENCHMARK(BM_CellRecovery);

BENCHMARK_MAIN();

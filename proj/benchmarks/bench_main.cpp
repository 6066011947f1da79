#include <benchmark/benchmark.h>

#include "affinv/calculus.hpp"
#include "affinv/krylov.hpp"
#include "affinv/sampling.hpp"
#include "affinv/sympoly.hpp"

using namespace affinv;

static void BM_KrylovD(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(1);
  const RatMatrix x = random_int_matrix(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(D(x));
}
BENCHMARK(BM_KrylovD)->DenseRange(2, 8, 2);

static void BM_DeterminantBareiss(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(2);
  RatMatrix x = random_int_matrix(rng, n);
  for (std::size_t i = 0; i < n; ++i) x(i, i) = random_rational(rng, 9, 9, true);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(x));
}
BENCHMARK(BM_DeterminantBareiss)->RangeMultiplier(2)->Range(4, 32);

static void BM_MinPoly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(3);
  const RatMatrix x = random_int_matrix(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(min_poly(x));
}
BENCHMARK(BM_MinPoly)->DenseRange(2, 8, 2);

static void BM_SymbolicD(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_D(n));
}
BENCHMARK(BM_SymbolicD)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ConjugateIntoOmega(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng = make_rng(4);
  const RatMatrix x = random_regular_outside_omega(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_into_omega(x, 1));
}
BENCHMARK(BM_ConjugateIntoOmega)->DenseRange(2, 6, 2);

static void BM_WeakMonteCarlo(benchmark::State& state) {
  QuadratureSpec q;
  q.samples = static_cast<std::size_t>(state.range(0));
  const ScalarField u = ScalarField::constant(1) + ScalarField::pk(2);
  const ScalarField psi = box_bump(2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(weak_lie_derivatives(u, psi, q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WeakMonteCarlo)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

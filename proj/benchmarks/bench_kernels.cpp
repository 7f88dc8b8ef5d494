#include <benchmark/benchmark.h>

#include "pfq/decomp.hpp"
#include "pfq/identities.hpp"
#include "pfq/rpp.hpp"
#include "pfq/skewpf.hpp"

using namespace pfq;

namespace {

RSkew random_skew(int n, std::uint64_t seed) {
  Rng rng(seed);
  return RSkew::from_upper(n, Rational(0), [&](int, int) {
    return rat(rng.uniform(-7, 7), rng.uniform(1, 3));
  });
}

}  // namespace

static void BM_PfElimination(benchmark::State& state) {
  const RSkew A = random_skew(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pf_elimination(A));
}
BENCHMARK(BM_PfElimination)->DenseRange(4, 20, 4);

static void BM_PfExpansion(benchmark::State& state) {
  const RSkew A = random_skew(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pf_expansion(A));
}
BENCHMARK(BM_PfExpansion)->DenseRange(4, 10, 2);

static void BM_PfCombinatorial(benchmark::State& state) {
  const RSkew A = random_skew(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pf_combinatorial(A));
}
BENCHMARK(BM_PfCombinatorial)->DenseRange(4, 10, 2);

static void BM_DecomposeElimination(benchmark::State& state) {
  const RSkew A = random_skew(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pf_decompose_elimination(A));
}
BENCHMARK(BM_DecomposeElimination)->DenseRange(4, 20, 4);

static void BM_DecomposeBySubpf(benchmark::State& state) {
  const RSkew A = random_skew(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(pf_decompose_by_subpf(A));
}
BENCHMARK(BM_DecomposeBySubpf)->DenseRange(4, 10, 2);

// Pfaffian side of the main identity at random rational a, b, q.
static void BM_PfSpecialLhs(benchmark::State& state) {
  IdentityParams p;
  p.n = static_cast<int>(state.range(0));
  p.a = rat(2, 3);
  p.b = rat(-3, 5);
  p.q = rat(5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_pfaffian(IdentityId::PfSpecial, p));
}
BENCHMARK(BM_PfSpecialLhs)->DenseRange(1, 6);

static void BM_GfDeterminant(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const StrictPartition shape({5, 3, 2});
  const std::vector<int> mu{0, 1, 3};
  for (auto _ : state) benchmark::DoNotOptimize(gf_tableaux_det(shape, mu, K));
}
BENCHMARK(BM_GfDeterminant)->RangeMultiplier(2)->Range(4, 32);

static void BM_GfBruteForce(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const StrictPartition shape({3, 1});
  const std::vector<int> mu{0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(gf_tableaux_bruteforce(shape, mu, K));
}
BENCHMARK(BM_GfBruteForce)->DenseRange(2, 8, 2);

BENCHMARK_MAIN();

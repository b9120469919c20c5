#include <random>

#include "autw/closure.hpp"
#include "autw/helly.hpp"
#include "autw/intmatrix.hpp"
#include "autw/words.hpp"
#include "benchmark/benchmark.h"

namespace bm = benchmark;
using namespace autw;

static std::vector<int> random_raw(int rank, std::size_t len) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(1, rank);
  std::vector<int> raw(len);
  for (auto& x : raw) x = pick(rng);
  return raw;
}

static void BM_CoxReduce(bm::State& state) {
  const auto raw = random_raw(4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto w = cox_reduce(4, raw);
    bm::DoNotOptimize(w);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CoxReduce)->Range(64, 1 << 16);

static void BM_ComposeGrowing(bm::State& state) {
  // sigma(1,2) alpha(1,2) has infinite order; powers grow linearly.
  const auto f = sigma(1, 2, 4) * alpha(Permutation::transposition(4, 1, 2));
  CoxAut p = CoxAut::identity(4);
  for (int k = 0; k < state.range(0); ++k) p = p * f;
  for (auto _ : state) {
    auto q = p * f;
    bm::DoNotOptimize(q);
  }
}
BENCHMARK(BM_ComposeGrowing)->Range(8, 512);

static void BM_Iota(bm::State& state) {
  const int n = static_cast<int>(state.range(0));
  CoxAut f = CoxAut::identity(n);
  for (int i = 1; i < n; ++i) f = f * sigma(i, i + 1, n) * alpha(Permutation::transposition(n, 1, i + 1));
  for (auto _ : state) {
    auto g = iota(f);
    bm::DoNotOptimize(g);
  }
}
BENCHMARK(BM_Iota)->DenseRange(4, 12, 4);

static void BM_FiniteOrderExact(bm::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  auto a = IntMatrix::zero(d);  // cyclic permutation, order d
  for (std::size_t i = 0; i < d; ++i) a((i + 1) % d, i) = 1;
  for (auto _ : state) {
    auto k = finite_order_exact(a);
    bm::DoNotOptimize(k);
  }
}
BENCHMARK(BM_FiniteOrderExact)->DenseRange(2, 10, 4);

static void BM_ClosureTypeB(bm::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<CoxAut> gens{sigma(1, 2, n)};
  for (int i = 2; i < n; ++i) gens.push_back(alpha(Permutation::transposition(n, i, i + 1)));
  for (auto _ : state) {
    auto r = closure_order(gens, 100000);
    bm::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ClosureTypeB)->DenseRange(4, 6)->Unit(bm::kMillisecond);

static void BM_HellyCertificate(bm::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto c = helly_certificate(n, d, {100000, 1});
    bm::DoNotOptimize(c);
  }
}
BENCHMARK(BM_HellyCertificate)->Args({8, 3})->Args({10, 4})->Args({12, 5})->Unit(bm::kMillisecond);

BENCHMARK_MAIN();

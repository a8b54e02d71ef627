#include <benchmark/benchmark.h>

#include "annular/annular_poset.hpp"
#include "annular/factorization.hpp"
#include "annular/marked_poset.hpp"

using namespace annular;

static void BM_UpperCovers(benchmark::State& state) {
  const AnnularPoset poset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const auto elements = poset.elements();
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& s : elements) total += poset.interval().upper_covers(s).size();
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elements.size()));
}
BENCHMARK(BM_UpperCovers)->Args({2, 1})->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

static void BM_ChainWalk(benchmark::State& state) {
  const AnnularPoset poset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(poset.count_chains());
}
BENCHMARK(BM_ChainWalk)->Args({2, 2})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_MarkedChains(benchmark::State& state) {
  const MarkedPoset poset(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(poset.count_maximal_chains());
}
BENCHMARK(BM_MarkedChains)->Args({2, 2})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_MtfDfs(benchmark::State& state) {
  const auto lambda = Partition::parse(state.range(0) == 0 ? "3,2" : "1,1,1,1,1");
  for (auto _ : state) benchmark::DoNotOptimize(count_mtf_enumerate(lambda));
}
BENCHMARK(BM_MtfDfs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MtfDp(benchmark::State& state) {
  const auto lambda = Partition::parse(state.range(0) == 0 ? "4,3" : "2,2,2,1");
  for (auto _ : state) benchmark::DoNotOptimize(count_mtf_dp(lambda));
}
BENCHMARK(BM_MtfDp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

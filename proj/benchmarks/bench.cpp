#include <benchmark/benchmark.h>

#include "cmotzkin/bijection.hpp"
#include "cmotzkin/enumerate.hpp"
#include "cmotzkin/formulas.hpp"

using namespace cmotzkin;

static void BM_enumerate_paths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  std::uint64_t words = 0;
  for (auto _ : state) {
    MotzkinGenerator gen(n, d);
    while (auto path = gen.next()) {
      ++words;
      benchmark::DoNotOptimize(path->steps.data());
    }
  }
  state.counters["words"] = static_cast<double>(words) /
                            static_cast<double>(state.iterations());
}
BENCHMARK(BM_enumerate_paths)->Args({12, 1})->Args({9, 2})->Args({7, 3});

static void BM_walk_dp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    BigInt count = count_motzkin_dp(n, d, LevelPolicy::Anywhere);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_walk_dp)->Args({40, 2})->Args({40, 4});

static void BM_tableau_dp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int rows = static_cast<int>(state.range(1));
  for (auto _ : state) {
    BigInt count = count_syt_dp(n, rows);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_tableau_dp)->Args({40, 5})->Args({40, 9});

static void BM_five_row_formula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigInt count = syt_count_formula(n, 5);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_five_row_formula)->Arg(40)->Arg(100);

static void BM_map_all(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const std::vector<MotzkinWord> paths = all_motzkin(n, d);
  for (auto _ : state) {
    for (const MotzkinWord& path : paths) {
      YamanouchiWord word = path_to_tableau(path);
      benchmark::DoNotOptimize(word.letters.data());
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_map_all)->Args({10, 1})->Args({8, 2});

static void BM_roundtrip_all(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const std::vector<MotzkinWord> paths = all_motzkin(n, d);
  for (auto _ : state) {
    for (const MotzkinWord& path : paths) {
      MotzkinWord back = tableau_to_path(path_to_tableau(path), d);
      benchmark::DoNotOptimize(back.steps.data());
    }
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(paths.size()));
}
BENCHMARK(BM_roundtrip_all)->Args({8, 2});

BENCHMARK_MAIN();

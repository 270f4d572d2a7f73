#include <benchmark/benchmark.h>

#include "kerrep/dejean.hpp"
#include "kerrep/kernel_verifier.hpp"
#include "kerrep/word_index.hpp"

using namespace kerrep;

static void BM_FixedPointPrefix(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dejean::fixed_point(n));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_FixedPointPrefix)->Arg(1000)->Arg(100000)->Arg(1000000);

static void BM_IndexBuild(benchmark::State& state) {
  const Word text =
      build_test_word(dejean::morphism(), dejean::cover_u1(), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(WordIndex(text, 4));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_IndexBuild)->Arg(5)->Arg(7);

static void BM_MaxPeriodExtension(benchmark::State& state) {
  const WordIndex idx(build_test_word(dejean::morphism(), dejean::cover_u1(), 6), 4);
  std::size_t start = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(idx.max_period_extension(start, 4 + start % 64));
    start = (start + 577) % (idx.size() - 128);
  }
}
BENCHMARK(BM_MaxPeriodExtension);

static void BM_Scan(benchmark::State& state) {
  const Word text =
      build_test_word(dejean::morphism(), dejean::cover_u1(), static_cast<int>(state.range(0)));
  const WordIndex idx(text, 4);
  const VerifierConfig cfg = dejean::standard_config();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan(idx, cfg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_Scan)->Arg(4)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

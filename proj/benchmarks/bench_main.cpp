#include <benchmark/benchmark.h>

#include <random>

#include "nps/diffset.hpp"
#include "nps/search.hpp"
#include "nps/sequence.hpp"

using namespace nps;

namespace {

AlmostSequence random_sequence(int m, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> e(0, m - 1);
  std::vector<Symbol> s(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) s[static_cast<std::size_t>(i)] = Symbol::exp(e(rng));
  return AlmostSequence(m, std::move(s));
}

void BM_Spectrum(benchmark::State& state) {
  const auto seq = random_sequence(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(seq));
}
BENCHMARK(BM_Spectrum)->Args({3, 64})->Args({3, 256})->Args({8, 256})->Args({7, 1024});

void BM_Classify(benchmark::State& state) {
  const auto seq = random_sequence(3, static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(classify(seq));
}
BENCHMARK(BM_Classify)->Arg(64)->Arg(512);

void BM_DifferenceTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto r = construct_prop5(n, 1, 0).set;
  for (auto _ : state) benchmark::DoNotOptimize(difference_table(r));
}
BENCHMARK(BM_DifferenceTable)->Arg(16)->Arg(64)->Arg(128);

void BM_VerifyPdpds(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto r = construct_prop5(n, 1, 0).set;
  for (auto _ : state) benchmark::DoNotOptimize(verify_lpdpds(r, 1));
}
BENCHMARK(BM_VerifyPdpds)->Arg(16)->Arg(64);

void BM_Search(benchmark::State& state) {
  SearchSpec spec;
  spec.m = 3;
  spec.period = static_cast<int>(state.range(0));
  spec.zero_mode = SearchSpec::ZeroMode::Consecutive;
  spec.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(spec));
}
BENCHMARK(BM_Search)->Arg(9)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_SearchUnpruned(benchmark::State& state) {
  SearchSpec spec;
  spec.m = 3;
  spec.period = static_cast<int>(state.range(0));
  spec.zero_mode = SearchSpec::ZeroMode::Consecutive;
  spec.correlation_prune = false;
  spec.symmetry_prune = false;
  spec.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_search(spec));
}
BENCHMARK(BM_SearchUnpruned)->Arg(9)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

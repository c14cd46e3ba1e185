#include <benchmark/benchmark.h>

#include "agmon/extremal.hpp"
#include "agmon/proof_trace.hpp"
#include "agmon/verify.hpp"

namespace {

using namespace agmon;

LatticeSeq cube(int d, Coord extent) {
  Rng rng(1);
  return random_sequence(std::vector<Coord>(static_cast<std::size_t>(d), extent),
                         Distribution::Gaussian, rng);
}

void BM_GradientNorm(benchmark::State& state) {
  const auto seq = cube(static_cast<int>(state.range(0)), state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gradient_sq_norm(seq));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seq.size()));
}
BENCHMARK(BM_GradientNorm)->Args({1, 1024})->Args({2, 32})->Args({3, 10})->Args({3, 21});

void BM_MainRatio(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto seq = cube(d, 21);
  for (auto _ : state) benchmark::DoNotOptimize(ratio(seq, 1));
}
BENCHMARK(BM_MainRatio)->DenseRange(1, 3);

void BM_AgmonCauchy(benchmark::State& state) {
  const auto seq = cube(3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check(Inequality::AgmonCauchy, seq, 1));
}
BENCHMARK(BM_AgmonCauchy)->Arg(5)->Arg(10);

void BM_SuiteTrial(benchmark::State& state) {
  SuiteConfig cfg{2, 1, 1000, {8, 8}, 7, Distribution::Gaussian, kDefaultTolerance};
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(cfg, Inequality::Main).worst_ratio);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.count));
}
BENCHMARK(BM_SuiteTrial)->Unit(benchmark::kMillisecond);

void BM_ExpandChain(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_chain(d).size());
}
BENCHMARK(BM_ExpandChain)->Arg(8)->Arg(14)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_TotalKappa(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto terms = expand_chain(d);
  const auto plan = canonical_plan(d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(total_kappa(terms, plan));
}
BENCHMARK(BM_TotalKappa)->Arg(8)->Arg(14);

void BM_SearchIteration(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  auto cfg = SearchConfig::defaults(d, 1);
  Rng rng(3);
  CoordinateAscent ascent(restart_start(cfg, 1, rng), 1, cfg.step_init);
  for (auto _ : state) benchmark::DoNotOptimize(ascent.advance(rng));
}
BENCHMARK(BM_SearchIteration)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();

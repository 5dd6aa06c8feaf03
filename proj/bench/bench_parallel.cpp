// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "unitposet/parallel.hpp"
#include "unitposet/random.hpp"

using namespace unitposet;

namespace {

const std::vector<Poset>& posets6() {
  static const auto p = enumerate_natural_posets(6);
  return p;
}

std::vector<BlockMatrix> planted_batch(int count) {
  std::mt19937_64 rng(1);
  std::vector<BlockMatrix> out;
  for (int i = 0; i < count; ++i) {
    auto p = random_semichain(6, rng);
    out.push_back(plant(p, random_summands(p, 12, 0.1, 10.0, rng), rng).disguised);
  }
  return out;
}

void BM_SweepSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(par::sweep_posets_serial(posets6()));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(posets6().size()));
}

void BM_SweepParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(par::sweep_posets(posets6()));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(posets6().size()));
}

void BM_DecomposeSerial(benchmark::State& st) {
  const auto batch = planted_batch(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(par::decompose_batch_serial(batch));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_DecomposeParallel(benchmark::State& st) {
  const auto batch = planted_batch(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(par::decompose_batch(batch));
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_BoxSearchSerial(benchmark::State& st) {
  const auto f = q_form(Poset::chain(5));  // weakly positive: the whole box is scanned
  for (auto _ : st) benchmark::DoNotOptimize(weak_counterexample(f, static_cast<int>(st.range(0))));
}

void BM_BoxSearchParallel(benchmark::State& st) {
  const auto f = q_form(Poset::chain(5));
  for (auto _ : st) benchmark::DoNotOptimize(par::weak_counterexample(f, static_cast<int>(st.range(0))));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecomposeParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxSearchSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoxSearchParallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

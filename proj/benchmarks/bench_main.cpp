#include <benchmark/benchmark.h>

#include "evenhole/cleaning.hpp"
#include "evenhole/generators.hpp"
#include "evenhole/holes.hpp"
#include "evenhole/pipeline.hpp"
#include "evenhole/two_join.hpp"

namespace {

using namespace evenhole;

PipelineOptions single_thread() {
  PipelineOptions o;
  o.threads = 1;
  return o;
}

void BM_RecognizeGnp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    Graph g = generate(gen::Gnp{n, 0.3}, seed++);
    state.ResumeTiming();
    benchmark::DoNotOptimize(recognize(g, single_thread()).status);
  }
}
BENCHMARK(BM_RecognizeGnp)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_RecognizeChordal(benchmark::State& state) {
  const Graph g = generate(gen::Chordal{static_cast<int>(state.range(0)), 6}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g, single_thread()).status);
}
BENCHMARK(BM_RecognizeChordal)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_RecognizeCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize(g, single_thread()).status);
}
BENCHMARK(BM_RecognizeCycle)->Arg(16)->Arg(17)->Arg(64)->Arg(65)->Unit(benchmark::kMicrosecond);

void BM_OracleGnp(benchmark::State& state) {
  const Graph g = generate(gen::Gnp{static_cast<int>(state.range(0)), 0.3}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(has_even_hole(g));
}
BENCHMARK(BM_OracleGnp)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMicrosecond);

void BM_MaximalCliques(benchmark::State& state) {
  const Graph g = generate(gen::Chordal{static_cast<int>(state.range(0)), 8}, 5);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_cliques_capped(g, 1u << 20));
}
BENCHMARK(BM_MaximalCliques)->Arg(30)->Arg(60)->Arg(120);

void BM_FindNonPath2Join(benchmark::State& state) {
  const Graph g = generate(gen::TwoJoin{static_cast<int>(state.range(0))}, 11);
  for (auto _ : state) benchmark::DoNotOptimize(find_non_path_2join(g));
}
BENCHMARK(BM_FindNonPath2Join)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

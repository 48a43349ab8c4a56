#include <benchmark/benchmark.h>

#include "gracegraph/cycles.hpp"
#include "gracegraph/families.hpp"
#include "gracegraph/graph6.hpp"
#include "gracegraph/iso.hpp"
#include "gracegraph/solver.hpp"

using namespace gracegraph;

namespace {

Graph family(const std::string& spec) { return make(FamilySpec::parse(spec)); }

void BM_SolveCycle(benchmark::State& state) {
  Graph g = family("cycle(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) {
    SolveOptions opts;
    benchmark::DoNotOptimize(solve_graceful(g, opts));
  }
}
BENCHMARK(BM_SolveCycle)->Arg(11)->Arg(12)->Arg(15)->Arg(16);

void BM_SolveWheel(benchmark::State& state) {
  Graph g = family("wheel(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) {
    SolveOptions opts;
    benchmark::DoNotOptimize(solve_graceful(g, opts));
  }
}
BENCHMARK(BM_SolveWheel)->Arg(5)->Arg(6)->Arg(7);

void BM_SolveDutch(benchmark::State& state) {
  Graph g = family("dutch_windmill(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) {
    SolveOptions opts;
    benchmark::DoNotOptimize(solve_graceful(g, opts));
  }
}
BENCHMARK(BM_SolveDutch)->Arg(3)->Arg(4);

void BM_ExhaustTwoTriangles(benchmark::State& state) {
  Graph g = family("dutch_windmill(2)");
  for (auto _ : state) {
    SolveOptions opts;
    opts.rosa_golomb_shortcut = false;
    benchmark::DoNotOptimize(solve_graceful(g, opts));
  }
}
BENCHMARK(BM_ExhaustTwoTriangles);

void BM_EnumerateCycleLabelings(benchmark::State& state) {
  Graph g = family("cycle(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state) {
    SolveOptions opts;
    benchmark::DoNotOptimize(
        enumerate_graceful(g, EnumMode::up_to_complement, opts));
  }
}
BENCHMARK(BM_EnumerateCycleLabelings)->Arg(7)->Arg(8);

void BM_CycleCensus(benchmark::State& state) {
  Graph g = family("complete(" + std::to_string(state.range(0)) + ")");
  for (auto _ : state)
    benchmark::DoNotOptimize(simple_cycles(g, kSimpleCycleCap));
}
BENCHMARK(BM_CycleCensus)->Arg(5)->Arg(6);

void BM_DecompositionCensus(benchmark::State& state) {
  Graph g = family("complete(5)");
  for (auto _ : state)
    benchmark::DoNotOptimize(cycle_decompositions(g, kDecompositionCap));
}
BENCHMARK(BM_DecompositionCensus);

void BM_Certificate(benchmark::State& state) {
  Graph g = family("complete_bipartite(4,4)");
  for (auto _ : state) benchmark::DoNotOptimize(certificate(g));
}
BENCHMARK(BM_Certificate);

void BM_Graph6RoundTrip(benchmark::State& state) {
  std::vector<int> spine(30, 2);
  Graph g = caterpillar(spine);
  for (auto _ : state)
    benchmark::DoNotOptimize(decode_graph6(encode_graph6(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();

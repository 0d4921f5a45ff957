// Microbenchmarks for the exact solvers and the hot utility paths. Inputs are
// fixed seeds so numbers are comparable across runs.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "grundylab/coloring.hpp"
#include "grundylab/domination.hpp"
#include "grundylab/generators.hpp"
#include "grundylab/graph.hpp"
#include "grundylab/graph_io.hpp"

using namespace grundylab;

namespace {

void BM_FirstFit(benchmark::State& state) {
  const Graph g = random_graph(200, 0.1, 7);
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  for (auto _ : state) {
    Coloring c = first_fit(g, order);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FirstFit);

void BM_GrundyExactPetersen(benchmark::State& state) {
  const Graph g = petersen();
  for (auto _ : state) {
    GrundyResult r = grundy_number_exact(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GrundyExactPetersen);

void BM_GrundyExactRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.4, 11);
  for (auto _ : state) {
    GrundyResult r = grundy_number_exact(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GrundyExactRandom)->Arg(10)->Arg(12)->Arg(14);

void BM_GrundyExactExtremal(benchmark::State& state) {
  const Graph g = extremal_even(6).graph;
  for (auto _ : state) {
    GrundyResult r = grundy_number_exact(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_GrundyExactExtremal);

void BM_DominationExact(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 13);
  for (auto _ : state) {
    DominationWitness w = domination_number_exact(g);
    benchmark::DoNotOptimize(w);
  }
}
BENCHMARK(BM_DominationExact)->Arg(14)->Arg(18);

void BM_StarPartitionExact(benchmark::State& state) {
  const Graph g = random_graph(14, 0.3, 17);
  for (auto _ : state) {
    StarPartitionResult r = star_partition_number_exact(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_StarPartitionExact);

void BM_Girth(benchmark::State& state) {
  const Graph g = random_graph(300, 0.02, 19);
  for (auto _ : state) {
    Girth gi = g.girth();
    benchmark::DoNotOptimize(gi);
  }
}
BENCHMARK(BM_Girth);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const std::string line = serialize_graph6(random_graph(120, 0.15, 23));
  for (auto _ : state) {
    std::string again = serialize_graph6(parse_graph6(line));
    benchmark::DoNotOptimize(again);
  }
}
BENCHMARK(BM_Graph6RoundTrip);

}  // namespace

BENCHMARK_MAIN();

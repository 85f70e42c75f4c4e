// Serial reference vs OpenMP search, and both against the decomposition
// route, on graphs at the oracle's size limit.

#include <benchmark/benchmark.h>

#include <random>

#include "xjoin/automorphism.hpp"
#include "xjoin/construction.hpp"
#include "xjoin/named_graphs.hpp"

namespace {

using namespace xjoin;

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

const Graph& fixture(int id) {
  static const std::vector<Graph> graphs{
      named::petersen(),
      named::complete(12),
      lex_product(named::cycle(4), named::edgeless(3)),
      x_join(named::path(4), parse_fiber_spec("i3 i3 i3 i3")).graph,
      random_graph(12, 0.5, 1),
      named::cycle(12),
  };
  return graphs.at(static_cast<std::size_t>(id));
}

const char* kNames[] = {"petersen", "K12", "C4oPhi3", "P4_i3", "G(12,0.5)", "C12"};

void BM_BruteForceSerial(benchmark::State& state) {
  const Graph& g = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_aut_serial(g));
}

void BM_BruteForceParallel(benchmark::State& state) {
  const Graph& g = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_aut(g));
}

void BM_Decomposition(benchmark::State& state) {
  const Graph& g = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kNames[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(aut_from_decomposition(decompose(g)));
}

BENCHMARK(BM_BruteForceSerial)->DenseRange(0, 5);
BENCHMARK(BM_BruteForceParallel)->DenseRange(0, 5);
BENCHMARK(BM_Decomposition)->DenseRange(0, 5);

}  // namespace

BENCHMARK_MAIN();

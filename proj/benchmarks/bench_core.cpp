#include <benchmark/benchmark.h>

#include <random>

#include "artin/corpus.hpp"
#include "artin/oracle.hpp"
#include "artin/splittings.hpp"
#include "artin/tits.hpp"

namespace {

artin::PresentationGraph random_graph(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(0.3);
  const artin::Label labels[] = {2, 3, 4, 5, 6};
  std::vector<artin::PresentationGraph::NamedEdge> edges;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (edge(rng)) edges.push_back({names[i], names[j], labels[rng() % 5]});
  return artin::PresentationGraph(names, edges);
}

void BM_OddComponents(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) {
    auto partition = artin::odd_components(g);
    benchmark::DoNotOptimize(partition);
  }
}
BENCHMARK(BM_OddComponents)->Arg(16)->Arg(64)->Arg(256);

void BM_Diameter(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 43);
  for (auto _ : state) {
    auto d = artin::diameter(g);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Diameter)->Arg(64)->Arg(256);

void BM_IsSpherical(benchmark::State& state) {
  const auto g = artin::corpus::figure3_union();
  for (auto _ : state) {
    bool s = artin::is_spherical(g, g.all_vertices());
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_IsSpherical);

void BM_EnumerateSplittingsPath(benchmark::State& state) {
  const auto g =
      artin::corpus::path(static_cast<int>(state.range(0)), artin::Label{2});
  for (auto _ : state) {
    auto list = artin::enumerate_splittings(g, artin::SplittingMode::All);
    benchmark::DoNotOptimize(list);
  }
}
BENCHMARK(BM_EnumerateSplittingsPath)->Arg(8)->Arg(12)->Arg(14);

void BM_TheoremVerdict(benchmark::State& state) {
  const auto g = artin::corpus::figure3_union();
  const auto s = artin::require_splitting(
      g, artin::VertexSet::of(g, {"a", "b", "c", "e", "f", "g"}),
      artin::VertexSet::of(g, {"b", "c", "d", "f", "g", "h"}));
  for (auto _ : state) {
    auto v = artin::theorem_verdict(g, s);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_TheoremVerdict);

void BM_CertifyUnionGraph(benchmark::State& state) {
  const auto g = artin::corpus::figure3_union();
  for (auto _ : state) {
    auto cert = artin::certify(g);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_CertifyUnionGraph);

void BM_EnumerateCoxeterH3(benchmark::State& state) {
  const artin::PresentationGraph h3(
      {"a", "b", "c"}, {{"a", "b", 5}, {"b", "c", 3}, {"a", "c", 2}});
  const auto m = artin::coxeter_matrix(h3, h3.all_vertices());
  for (auto _ : state) {
    auto table = artin::oracle::enumerate_coxeter(m);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_EnumerateCoxeterH3);

} // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}

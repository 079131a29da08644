#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>

#include "hrgpg/enumerate.hpp"
#include "hrgpg/grammar_io.hpp"
#include "hrgpg/plr.hpp"
#include "hrgpg/transform.hpp"

using namespace hrgpg;

namespace {

Hrg fixture(const char* name) {
  return read_grammar_file(std::filesystem::path(HRGPG_SOURCE_DIR) / "fixtures" / name);
}

// Directed cycle over "abab..." with n edges.
Hypergraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({"e" + std::to_string(i + 1), i % 2 == 0 ? "a" : "b",
                     {"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)}});
  }
  return Hypergraph(std::move(edges));
}

void BM_ParseCycle(benchmark::State& state) {
  const ParseTable table = build_table(translate_grammar(fixture("cycle.hrg")));
  const Hypergraph h = cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto r = parse(table, h);
    benchmark::DoNotOptimize(r);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ParseCycle)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_BuildTable(benchmark::State& state) {
  const PositionalGrammar pg = translate_grammar(fixture("cycle.hrg"));
  for (auto _ : state) {
    auto t = build_table(pg);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_BuildTable);

void BM_Normalize(benchmark::State& state) {
  const Hrg g = fixture("cycle-scrambled.hrg");
  for (auto _ : state) {
    auto r = normalize(g);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Normalize);

void BM_Enumerate(benchmark::State& state) {
  const Hrg g = fixture("cycle.hrg");
  EnumerateOptions options;
  options.max_edges = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto classes = enumerate_graphs(g, options);
    benchmark::DoNotOptimize(classes);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();

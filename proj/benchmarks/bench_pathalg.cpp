#include <benchmark/benchmark.h>

#include "pathalg/graph_library.hpp"
#include "pathalg/normal_form.hpp"
#include "pathalg/sparse_echelon.hpp"
#include "pathalg/verification.hpp"

using namespace pathalg;

static void BM_HilbertSeries(benchmark::State& state) {
  const auto g = boolean_lattice(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(g, 8));
}
BENCHMARK(BM_HilbertSeries)->Arg(3)->Arg(4)->Arg(5);

static void BM_EnumerateBasis(benchmark::State& state) {
  const auto g = boolean_lattice(3);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(g, level));
}
BENCHMARK(BM_EnumerateBasis)->Arg(4)->Arg(6);

// Normal forms of every word of level 4, with a fresh reducer each time.
static void BM_NormalFormWords(benchmark::State& state) {
  const auto g = boolean_lattice(static_cast<int>(state.range(0)));
  std::vector<Word> words{{}};
  for (int pass = 0; pass < 4; ++pass) {
    std::vector<Word> next;
    for (const auto& w : words) {
      if (word_level(g, w) == 4) continue;
      for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        Word x = w;
        x.push_back(e);
        if (word_level(g, x) <= 4) next.push_back(std::move(x));
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  for (auto _ : state) {
    Reducer r(g);
    for (const auto& w : words) benchmark::DoNotOptimize(r.normal_form(NcPoly::word(g, w)));
  }
  state.counters["words"] = static_cast<double>(words.size());
}
BENCHMARK(BM_NormalFormWords)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_VerifyBasis(benchmark::State& state) {
  const auto g = boolean_lattice(3);
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_basis(g, level));
}
BENCHMARK(BM_VerifyBasis)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_BruteForcePartition(benchmark::State& state) {
  const auto g = partition_lattice(4);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_dims(g, 4, GeneratorChoice::Reduced));
}
BENCHMARK(BM_BruteForcePartition)->Unit(benchmark::kMillisecond);

static void BM_EchelonBanded(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    SparseRowEchelon e;
    for (std::size_t i = 0; i < n; ++i) {
      SparseRowEchelon::Row row;
      for (std::size_t j = i; j < std::min(n, i + 4); ++j) row.emplace_back(j, static_cast<long>(j - i + 1));
      e.insert(std::move(row));
    }
    benchmark::DoNotOptimize(e.rank());
  }
}
BENCHMARK(BM_EchelonBanded)->Arg(256)->Arg(2048);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <string>

#include "knotvol/bracket.hpp"
#include "knotvol/flype.hpp"
#include "knotvol/jones.hpp"
#include "knotvol/knotbase.hpp"
#include "knotvol/report.hpp"

namespace {

knotvol::LinkDiagram knot(const std::string& name) {
  static const knotvol::KnotTable table(
      knotvol::load_table(std::string(KNOTVOL_DATA_DIR) + "/knot_table.csv").records);
  return knotvol::parse_pd(table.find(name)->pd);
}

// 7_5 as distributed by KnotInfo; one flype merges two of its twist regions.
const char* kUnreduced = "PD[X[2,10,3,9],X[4,2,5,1],X[6,14,7,13],X[8,12,9,11],X[10,4,11,3],X[12,6,13,5],X[14,8,1,7]]";

void BM_Bracket(benchmark::State& state) {
  const auto d = knot("9_20");
  for (auto _ : state) benchmark::DoNotOptimize(knotvol::kauffman_bracket(d));
}
BENCHMARK(BM_Bracket);

void BM_ColoredJones3(benchmark::State& state) {
  const auto d = knot("9_20");
  for (auto _ : state) benchmark::DoNotOptimize(knotvol::colored_jones3(d));
}
BENCHMARK(BM_ColoredJones3)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto d = knot("9_20");
  knotvol::AnalysisOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(knotvol::analyze(d, "9_20", opts));
}
BENCHMARK(BM_Analyze);

void BM_TwistReduce(benchmark::State& state) {
  const auto d = knotvol::parse_pd(kUnreduced);
  for (auto _ : state) benchmark::DoNotOptimize(knotvol::twist_reduce(d));
}
BENCHMARK(BM_TwistReduce);

}  // namespace
BENCHMARK_MAIN();

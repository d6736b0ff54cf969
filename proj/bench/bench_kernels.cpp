// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "prodstruct/colouring.h"
#include "prodstruct/generators.h"
#include "prodstruct/lift.h"
#include "prodstruct/shortcut.h"
#include "prodstruct/treewidth.h"

using namespace prodstruct;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_treewidth_exact(benchmark::State& s) {
  Graph g = random_graph(static_cast<int>(s.range(1)), 3.0, 1);
  for (auto _ : s) benchmark::DoNotOptimize(treewidth_exact(g, kDefaultExactTwCap, mode(s)).width);
  label(s);
}
BENCHMARK(BM_treewidth_exact)->ArgsProduct({{0, 1}, {14, 18}})->Unit(benchmark::kMillisecond);

void BM_anchors(benchmark::State& s) {
  LayeredPartition lp = tripod_partition(random_triangulation(static_cast<int>(s.range(1)), 2));
  NormalizedDecomposition nd = normalize(lp.h, lp.td);
  ShortcutSystem sys = random_shortcuts(lp.g, 4, 3, lp.g.n(), 2);
  for (auto _ : s) benchmark::DoNotOptimize(anchors(lp.g, sys, lp.partition, nd, mode(s)));
  label(s);
}
BENCHMARK(BM_anchors)->ArgsProduct({{0, 1}, {2000, 10000}})->Unit(benchmark::kMillisecond);

void BM_power_shortcuts(benchmark::State& s) {
  Graph g = random_graph(static_cast<int>(s.range(1)), 4.0, 3);
  for (auto _ : s) benchmark::DoNotOptimize(power_shortcuts(g, 3, mode(s)).paths.size());
  label(s);
}
BENCHMARK(BM_power_shortcuts)->ArgsProduct({{0, 1}, {1000, 5000}})->Unit(benchmark::kMillisecond);

void BM_count_crossings(benchmark::State& s) {
  GeometricGraph gg = knn_build(random_points(static_cast<int>(s.range(1)), 4), 2);
  auto edges = gg.g.edges();
  for (auto _ : s) benchmark::DoNotOptimize(count_crossings(gg.points, edges, mode(s)));
  label(s);
}
BENCHMARK(BM_count_crossings)->ArgsProduct({{0, 1}, {500, 2000}})->Unit(benchmark::kMillisecond);

void BM_check_p_centered(benchmark::State& s) {
  Graph g = random_graph(18, 3.0, 5);
  Colouring c = chi_p_small(g, static_cast<int>(s.range(1)), ChiMode::heuristic).colouring;
  for (auto _ : s) benchmark::DoNotOptimize(check_p_centered(g, static_cast<int>(s.range(1)), c, 18, mode(s)).valid);
  label(s);
}
BENCHMARK(BM_check_p_centered)->ArgsProduct({{0, 1}, {2, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

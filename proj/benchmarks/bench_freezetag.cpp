#include <benchmark/benchmark.h>

#include "freezetag/cfa.hpp"
#include "freezetag/generator.hpp"
#include "freezetag/oracle.hpp"
#include "freezetag/ptas.hpp"

using namespace freezetag;

namespace {

Instance orthogonal(int robots, int holes) { return generate_instance(17, robots, holes, Profile::RandomOrthogonal); }

void BM_GeodesicMetric(benchmark::State& state) {
  const Instance inst = orthogonal(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(GeodesicMetric(inst.robots.positions(), inst.domain).diameter());
}
BENCHMARK(BM_GeodesicMetric)->Arg(8)->Arg(32)->Arg(128);

void BM_GreedySpanner(benchmark::State& state) {
  const Instance inst = orthogonal(static_cast<int>(state.range(0)), 2);
  const RobotSet all = place_steiner(inst.domain, inst.robots);
  const WeightedGraph vis = build_visibility_graph(all.positions(), inst.domain);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_spanner(vis, 6.0).k_measured);
}
BENCHMARK(BM_GreedySpanner)->Arg(8)->Arg(32)->Arg(128);

void BM_SolveCfa(benchmark::State& state) {
  const Instance inst = orthogonal(static_cast<int>(state.range(0)), 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_cfa(inst.domain, inst.robots, Metric::Geodesic).schedule.makespan_all);
}
BENCHMARK(BM_SolveCfa)->Arg(8)->Arg(32)->Arg(128);

void BM_ExactOracle(benchmark::State& state) {
  const Instance inst = generate_instance(23, static_cast<int>(state.range(0)), 0, Profile::Convex);
  const TravelTable table(inst.robots, inst.domain, Metric::Geodesic);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_makespan(inst.robots, table).makespan);
}
BENCHMARK(BM_ExactOracle)->DenseRange(4, 8, 2);

void BM_SolvePtas(benchmark::State& state) {
  const Instance inst = orthogonal(24, 1);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_ptas(inst.domain, inst.robots, Metric::Geodesic, m).schedule.makespan_all);
}
BENCHMARK(BM_SolvePtas)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();

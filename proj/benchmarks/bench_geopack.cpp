#include <benchmark/benchmark.h>

#include "geopack/classification.hpp"
#include "geopack/dp.hpp"
#include "geopack/feasibility.hpp"
#include "geopack/grid.hpp"
#include "geopack/packers.hpp"
#include "geopack/pipelines.hpp"

#include <random>
#include <string>
#include <vector>

using namespace geopack;

namespace {

Rational grid_value(std::mt19937_64& g, double lo, double hi, long long den = 10000) {
  std::uniform_int_distribution<long long> u(static_cast<long long>(lo * den), static_cast<long long>(hi * den));
  return Rational(u(g)) / den;
}

std::vector<Item> disks(std::mt19937_64& g, int n, double lo, double hi) {
  std::uniform_int_distribution<int> p(1, 10);
  std::vector<Item> out;
  for (int i = 0; i < n; ++i) out.push_back(Item::disk("c" + std::to_string(i), grid_value(g, lo, hi), p(g)));
  return out;
}

PipelineOptions opts(const char* eps) {
  PipelineOptions o;
  o.eps = parse_rational(eps);
  return o;
}

}  // namespace

static void BM_BranchAndPrune(benchmark::State& state) {
  std::mt19937_64 g(1);
  const auto n = static_cast<int>(state.range(0));
  std::vector<Rational> radii;
  for (int i = 0; i < n; ++i) radii.push_back(grid_value(g, 0.15, 0.22));
  const auto sys = full_box_system(radii, KnapsackSpec::unit(2));
  for (auto _ : state) benchmark::DoNotOptimize(solve_branch_and_prune(sys, 1e-9, 400000));
}
BENCHMARK(BM_BranchAndPrune)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_Nfdh(benchmark::State& state) {
  std::mt19937_64 g(2);
  std::vector<Rational> sides;
  for (long long i = 0; i < state.range(0); ++i) sides.push_back(grid_value(g, 0.001, 0.05, 100000));
  for (auto _ : state) benchmark::DoNotOptimize(nfdh_pack_squares({Rational(1), Rational(1)}, sides));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Nfdh)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_ClassifyCircles(benchmark::State& state) {
  const Rational cell(1, state.range(0));
  std::vector<LegalRegion> large{
      {Rational(1, 4), {RationalInterval{Rational(1, 4), Rational(3, 10)}, RationalInterval{Rational(1, 4), Rational(3, 10)}}},
      {Rational(1, 5), {RationalInterval{Rational(3, 5), Rational(13, 20)}, RationalInterval{Rational(1, 2), Rational(11, 20)}}}};
  for (auto _ : state) benchmark::DoNotOptimize(classify_cells_circles(build_grid(KnapsackSpec::unit(2), cell), large).counts());
}
BENCHMARK(BM_ClassifyCircles)->Arg(64)->Arg(1024)->Arg(30720)->Unit(benchmark::kMillisecond);

static void BM_HierarchicalDp(benchmark::State& state) {
  std::mt19937_64 g(4);
  auto items = disks(g, static_cast<int>(state.range(0)), 0.02, 0.2);
  auto split = level_split_desk(items, Rational(1, 4), 1.0, 2, 0);
  const std::vector<std::vector<Rational>> roots{{Rational(0), Rational(0)}};
  for (auto _ : state) benchmark::DoNotOptimize(hierarchical_dp_pack(items, split, roots));
}
BENCHMARK(BM_HierarchicalDp)->Arg(8)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_PtasCircles(benchmark::State& state) {
  std::mt19937_64 g(5);
  auto items = disks(g, static_cast<int>(state.range(0)), 0.005, 0.04);
  items.push_back(Item::disk("L", Rational(27, 100), 20));
  for (auto _ : state) benchmark::DoNotOptimize(ptas_circles(items, opts("1/4")));
}
BENCHMARK(BM_PtasCircles)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Approx3(benchmark::State& state) {
  std::mt19937_64 g(6);
  auto items = disks(g, static_cast<int>(state.range(0)), 0.02, 0.45);
  for (auto _ : state) benchmark::DoNotOptimize(approx3_spheres(items, opts("1/8")));
}
BENCHMARK(BM_Approx3)->Arg(8)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_StripPrune(benchmark::State& state) {
  std::mt19937_64 g(7);
  std::vector<Item> items;
  std::vector<std::vector<Rational>> pos;
  const int k = static_cast<int>(state.range(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      items.push_back(Item::disk("d" + std::to_string(i * k + j), Rational(1, 4 * k), 1));
      pos.push_back({Rational(2 * i + 1, 2 * k), Rational(2 * j + 1, 2 * k)});
    }
  for (auto _ : state) benchmark::DoNotOptimize(strip_prune(items, pos, {Rational(0), Rational(0)}, Rational(1), Rational(1, 10)));
}
BENCHMARK(BM_StripPrune)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

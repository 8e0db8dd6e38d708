#include <benchmark/benchmark.h>

#include "ehrhart/datasets.hpp"
#include "ehrhart/lattice_enum.hpp"
#include "ehrhart/triangulation.hpp"

using namespace ehrhart;

namespace {

Polytope unit_cube(std::size_t d) {
  std::vector<LatticePoint> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    LatticePoint p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = (mask >> j) & 1;
    pts.push_back(std::move(p));
  }
  return Polytope(d, std::move(pts));
}

void BM_CountCubePoints(benchmark::State& state) {
  Polytope cube = unit_cube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(cube, 4));
  }
}
BENCHMARK(BM_CountCubePoints)->Arg(3)->Arg(4)->Arg(5);

void BM_CountTheorem1(benchmark::State& state) {
  Polytope p = theorem1_polytope();
  EnumOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  long k = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_points(p, k, opts));
  }
}
BENCHMARK(BM_CountTheorem1)->Arg(1)->Arg(2)->Arg(4);

void BM_HstarHalfopenTheorem1(benchmark::State& state) {
  Polytope p = theorem1_polytope();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hstar_halfopen(p));
  }
}
BENCHMARK(BM_HstarHalfopenTheorem1);

void BM_FacetEnumerationTheorem2(benchmark::State& state) {
  Polytope p = theorem2_polytope();
  for (auto _ : state) {
    Polytope fresh(p.ambient_dim(), p.generators());
    benchmark::DoNotOptimize(fresh.facets().size());
  }
}
BENCHMARK(BM_FacetEnumerationTheorem2);

}  // namespace

BENCHMARK_MAIN();

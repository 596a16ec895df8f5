#include <benchmark/benchmark.h>

#include "vecdil/ehrhart.hpp"

using namespace vecdil;

namespace {

VRep square() { return VRep{{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}}}; }
VRep triangle() { return VRep{{{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(-1)}}}; }

HRep band() {
  return HRep(Mat{{2, 1}, {-2, 1}, {0, 1}, {0, -1}}, {Rat(2), rat(7, 2), Rat(1), rat(1, 2)});
}

void BM_Count(benchmark::State& state) {
  HRep h(Mat{{1, 0}, {-1, 0}, {0, 1}, {0, -1}},
         RatVec(4, Rat(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(count(h));
}
BENCHMARK(BM_Count)->Arg(5)->Arg(20)->Arg(80);

void BM_VertexEnumeration(benchmark::State& state) {
  HRep h = band();
  for (auto _ : state) benchmark::DoNotOptimize(vertices(h));
}
BENCHMARK(BM_VertexEnumeration);

void BM_CoeffsAt(benchmark::State& state) {
  std::vector<VRep> parts = {square(), triangle()};
  RatVec r = {rat(1, 3), rat(2, 5)};
  for (auto _ : state) benchmark::DoNotOptimize(coeffs_at(parts, r));
}
BENCHMARK(BM_CoeffsAt);

void BM_ReconstructUnivariate(benchmark::State& state) {
  VRep t = triangle();
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_univariate(t));
}
BENCHMARK(BM_ReconstructUnivariate);

void BM_ChamberOf(benchmark::State& state) {
  HRep h = band();
  for (auto _ : state) benchmark::DoNotOptimize(chamber_of(h.A, h.b));
}
BENCHMARK(BM_ChamberOf);

}  // namespace

BENCHMARK_MAIN();

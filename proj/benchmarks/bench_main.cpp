#include <benchmark/benchmark.h>

#include "foursq/constructive.hpp"
#include "foursq/quad_enum.hpp"
#include "foursq/scanner.hpp"
#include "foursq/ternary.hpp"

namespace {

using namespace foursq;

void BM_ThreeSquareDecompose(benchmark::State& state) {
  Int n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(three_square_decompose(n));
    n = n + 1 > state.range(0) + 4096 ? state.range(0) : n + 1;
  }
}
BENCHMARK(BM_ThreeSquareDecompose)->Arg(1000)->Arg(1 << 20)->Arg(Int{1} << 40);

void BM_EnumerateFourSquares(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_four_squares(state.range(0)));
}
BENCHMARK(BM_EnumerateFourSquares)->Arg(1000)->Arg(10000)->Arg(100000);

// Search cost per n for a block of consecutive n starting at range(0).
void BM_FindConstrained(benchmark::State& state, const char* text, bool prune) {
  const auto spec = parse_constraint(text);
  const SearchOptions opts{prune};
  const Int base = state.range(0);
  Int n = base;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_constrained(n, spec, opts));
    n = n + 1 == base + 1024 ? base : n + 1;
  }
}
BENCHMARK_CAPTURE(BM_FindConstrained, one_three_five, "x+3y+5z ~ square [N]", true)
    ->Arg(1000)->Arg(100000)->Arg(1000000);
BENCHMARK_CAPTURE(BM_FindConstrained, one_three_five_noprune, "x+3y+5z ~ square [N]", false)
    ->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(BM_FindConstrained, legs, "legs(x+4y+4z, 9x+3y+3z) [N; y>0]", true)
    ->Arg(1000)->Arg(100000);
BENCHMARK_CAPTURE(BM_FindConstrained, integer_cube, "x+y ~ 2*cube [Z]", true)->Arg(1000)->Arg(100000);

void BM_Construct(benchmark::State& state, const char* family) {
  const auto f = TheoremFamily::parse(family);
  const Int base = state.range(0);
  Int n = base;
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct(f, n));
    n = n + 1 == base + 1024 ? base : n + 1;
  }
}
BENCHMARK_CAPTURE(BM_Construct, t11, "t11:a=1,m=4")->Arg(1000)->Arg(1 << 30);
BENCHMARK_CAPTURE(BM_Construct, t12ii, "t12ii:c=1")->Arg(1000)->Arg(1 << 30);
BENCHMARK_CAPTURE(BM_Construct, t13i, "t13i:c=2,d=4,m=2")->Arg(1000)->Arg(1 << 30);
BENCHMARK_CAPTURE(BM_Construct, t14iv, "t14iv")->Arg(1000)->Arg(1 << 20);

void BM_ScanChunk(benchmark::State& state) {
  ScanConfig c;
  c.spec = parse_constraint("x+3y+5z ~ square [N]");
  c.lo = state.range(0);
  c.hi = c.lo + 2000;
  c.chunk = 2000;
  ScanOptions opts;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scan(c, {}, opts));
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_ScanChunk)->Arg(0)->Arg(500000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DisjointnessSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_disjoint(state.range(0)));
}
BENCHMARK(BM_DisjointnessSweep)->Arg(1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

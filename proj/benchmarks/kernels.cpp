#include <benchmark/benchmark.h>

#include "cpstar/equiv.hpp"
#include "cpstar/random.hpp"
#include "cpstar/reduce.hpp"
#include "cpstar/wick.hpp"

using namespace cpstar;

namespace {

VarSpace space_for(const benchmark::State& st) {
  return VarSpace::euclidean(static_cast<int>(st.range(0)));
}

void BM_PolyMultiply(benchmark::State& st) {
  VarSpace s = space_for(st);
  RandomSource rng(1);
  SparsePoly a = rng.polynomial(s, 4, 12).numerator(), b = rng.polynomial(s, 4, 12).numerator();
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(1)->Arg(2)->Arg(3);

void BM_DivideByX(benchmark::State& st) {
  VarSpace s = space_for(st);
  RandomSource rng(2);
  SparsePoly p = rng.homogeneous(s, 3, 6).numerator() * s.x_poly().pow(3);
  for (auto _ : st) benchmark::DoNotOptimize(divide_by_x(p, s));
}
BENCHMARK(BM_DivideByX)->Arg(1)->Arg(2)->Arg(3);

void BM_WickProduct(benchmark::State& st) {
  VarSpace s = space_for(st);
  RandomSource rng(3);
  StarContext ctx(s, 6);
  LaurentElem f = rng.polynomial(s, 3, 6), g = rng.polynomial(s, 3, 6);
  for (auto _ : st) benchmark::DoNotOptimize(wick_product(f, g, ctx));
}
BENCHMARK(BM_WickProduct)->Arg(1)->Arg(2);

void BM_BidiffM(benchmark::State& st) {
  VarSpace s = VarSpace::euclidean(1);
  RandomSource rng(4);
  LaurentElem f = rng.homogeneous(s, 2), g = rng.homogeneous(s, 2);
  int r = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(bidiff_m(f, g, r));
}
BENCHMARK(BM_BidiffM)->DenseRange(1, 4);

void BM_MuStar(benchmark::State& st) {
  VarSpace s = space_for(st);
  RandomSource rng(5);
  StarContext ctx(s, 4);
  ReducedFn a(rng.homogeneous(s, 2)), b(rng.homogeneous(s, 2));
  for (auto _ : st) benchmark::DoNotOptimize(mu_star(a, b, ctx));
}
BENCHMARK(BM_MuStar)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TildeStar(benchmark::State& st) {
  VarSpace s = space_for(st);
  RandomSource rng(6);
  StarContext ctx(s, 4);
  LSeries f = ctx.lift(rng.invariant(s, 2)), g = ctx.lift(rng.invariant(s, 2));
  for (auto _ : st) benchmark::DoNotOptimize(tilde_star(f, g, ctx));
}
BENCHMARK(BM_TildeStar)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

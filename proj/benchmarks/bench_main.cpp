#include <benchmark/benchmark.h>

#include "realmult/realmult.hpp"

using namespace realmult;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

void BM_IsolateRoots(benchmark::State& st) {
  IntPolynomial p = poly({1, 0, -10, 0, 1, 3, -7});
  for (auto _ : st) benchmark::DoNotOptimize(isolate_real_roots(p));
}
BENCHMARK(BM_IsolateRoots);

void BM_FactorOverQ(benchmark::State& st) {
  IntPolynomial p = poly({-1, -1, 1}) * poly({-2, 0, 0, 1}) * poly({1, 1, 0, 0, 1});
  for (auto _ : st) benchmark::DoNotOptimize(factor_over_rationals(p));
}
BENCHMARK(BM_FactorOverQ);

void BM_CFExpand(benchmark::State& st) {
  AlgebraicReal x = AlgebraicReal::generator(quadratic_field(Integer(st.range(0))));
  for (auto _ : st) benchmark::DoNotOptimize(cf_expand(x));
}
BENCHMARK(BM_CFExpand)->Arg(94)->Arg(421)->Arg(9949);

void BM_JPExpandCubic(benchmark::State& st) {
  FieldPtr f = RealNumberField::from_root_index(poly({-1, -1, -1, 1}), 0);
  AlgebraicReal l = AlgebraicReal::generator(f);
  JPState s({(AlgebraicReal(1) + l) / l, l});
  for (auto _ : st) benchmark::DoNotOptimize(jp_expand(s));
}
BENCHMARK(BM_JPExpandCubic);

void BM_ClassGroup(benchmark::State& st) {
  QuadOrder o = order_from_disc(Integer(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(class_group(o));
}
BENCHMARK(BM_ClassGroup)->Arg(40)->Arg(1009)->Arg(4669);

void BM_BuildSpace(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_space(st.range(0)));
}
BENCHMARK(BM_BuildSpace)->Arg(23)->Arg(97)->Arg(389);

void BM_HeckeOperator(benchmark::State& st) {
  auto s = build_space(97);
  for (auto _ : st) benchmark::DoNotOptimize(s.hecke(st.range(0)));
}
BENCHMARK(BM_HeckeOperator)->Arg(2)->Arg(13)->Arg(20);

void BM_AnalyzeLevel(benchmark::State& st) {
  Config c;
  for (auto _ : st) benchmark::DoNotOptimize(analyze_level(st.range(0), c));
}
BENCHMARK(BM_AnalyzeLevel)->Arg(23)->Arg(29)->Arg(37)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

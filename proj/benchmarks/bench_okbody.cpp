#include <benchmark/benchmark.h>

#include "okbody/okbody.hpp"

using namespace okbody;

namespace {

BottSamelson make(const char* type, const char* word) {
  return BottSamelson(CartanDatum::parse(type), WeylWord::parse(word));
}

// Fresh variety per iteration so the caches do not hide the work.
void BM_NefBasis(benchmark::State& state) {
  const long long m = state.range(0);
  for (auto _ : state) {
    auto bs = make("A2", "1,2,1");
    benchmark::DoNotOptimize(section_basis_nef(bs, DivisorClass::canonical({m, m, m})));
  }
}
BENCHMARK(BM_NefBasis)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_GlueBasis(benchmark::State& state) {
  const long long m = state.range(0);
  for (auto _ : state) {
    auto bs = make("A2", "1,2,1");
    benchmark::DoNotOptimize(section_basis_glue(bs, DivisorClass::canonical({m, m, m})));
  }
}
BENCHMARK(BM_GlueBasis)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Body(benchmark::State& state) {
  for (auto _ : state) {
    auto bs = make("B2", "1,2");
    benchmark::DoNotOptimize(body(bs, DivisorClass::canonical({1, 1}), state.range(0)));
  }
}
BENCHMARK(BM_Body)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_GlobalCone(benchmark::State& state) {
  for (auto _ : state) {
    auto bs = make("A2", "1,2");
    benchmark::DoNotOptimize(global_cone(bs, 3, state.range(0)));
  }
}
BENCHMARK(BM_GlobalCone)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Hull(benchmark::State& state) {
  // Lattice points of a dilated simplex in dimension 3.
  std::vector<QVec> pts;
  const long k = state.range(0);
  for (long a = 0; a <= k; ++a)
    for (long b = 0; a + b <= k; ++b)
      for (long c = 0; a + b + c <= k; ++c) pts.push_back({Q(a), Q(b), Q(c)});
  for (auto _ : state) benchmark::DoNotOptimize(RationalPolytope::hull(pts));
}
BENCHMARK(BM_Hull)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "monocat/catalog.hpp"
#include "monocat/enumerate.hpp"
#include "monocat/internal_category.hpp"
#include "monocat/quadratic.hpp"

using namespace monocat;

namespace {

void BM_validate_monoid(benchmark::State& state) {
  const FiniteMonoid m = cyclic_group(static_cast<Elem>(state.range(0)));
  for (auto _ : state) {
    auto v = check_monoid(m.table, m.size, m.identity);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_validate_monoid)->Arg(6)->Arg(16)->Arg(64);

void BM_monoid_census(benchmark::State& state) {
  for (auto _ : state) {
    auto ms = monoid_census(static_cast<Elem>(state.range(0)));
    benchmark::DoNotOptimize(ms);
  }
}
BENCHMARK(BM_monoid_census)->Arg(3);

void BM_enumerate_xbsmod(benchmark::State& state) {
  const FiniteMonoid* a = catalog_find("z2");
  const FiniteMonoid* k = state.range(0) == 2 ? catalog_find("z2") : catalog_find("m3_2");
  for (auto _ : state) {
    auto found = enumerate_xbsmod(*a, *k);
    benchmark::DoNotOptimize(found);
  }
}
BENCHMARK(BM_enumerate_xbsmod)->Arg(2)->Arg(3);

void BM_classify_pair(benchmark::State& state) {
  const FiniteMonoid* z2 = catalog_find("z2");
  const FiniteMonoid* z3 = catalog_find("z3");
  for (auto _ : state) {
    auto rep = classify_pair(*z2, *z3);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_classify_pair);

void BM_build_qu(benchmark::State& state) {
  const QuParams params = make_qu_params(static_cast<std::uint32_t>(state.range(0)), 1, 4);
  for (auto _ : state) {
    auto x = build_qu(params);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_build_qu)->Arg(6);

void BM_qu_internal_category(benchmark::State& state) {
  const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  const CrossedSemiBimodule x =
      build_qu(n == 2 ? make_qu_params(2, 0, 0) : make_qu_params(3, 1, 1));
  const VerifyOptions opts{64, 0, 100'000};
  for (auto _ : state) {
    auto built = build_internal_category_reported(x, opts);
    benchmark::DoNotOptimize(built);
  }
}
BENCHMARK(BM_qu_internal_category)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_twist_monoid(benchmark::State& state) {
  const CrossedSemiBimodule x = build_qu(make_qu_params(4, 2, 1));
  for (auto _ : state) {
    auto tw = twist_monoid(x);
    benchmark::DoNotOptimize(tw);
  }
}
BENCHMARK(BM_twist_monoid);

}  // namespace

BENCHMARK_MAIN();

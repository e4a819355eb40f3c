#include <benchmark/benchmark.h>

#include "bomega/verify.hpp"

using namespace bomega;

namespace {

const Family& F3() {
  static const Family fam = Family::canonical(3);
  return fam;
}

void BM_Mul(benchmark::State& state) {
  const Elem a{17, 5, Ray{1}};
  const Elem b{3, 11, Ray{2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b, F3()));
  }
}
BENCHMARK(BM_Mul);

void BM_NfApply(benchmark::State& state) {
  const NormalForm f{3, 4, 1};
  const Elem x{12, 7, Ray{2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf_apply(f, x));
  }
}
BENCHMARK(BM_NfApply);

void BM_NfCompose(benchmark::State& state) {
  const NormalForm f{3, 4, 1};
  const NormalForm g{2, 5, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(nf_compose(f, g));
  }
}
BENCHMARK(BM_NfCompose);

void BM_WindowEnumerate(benchmark::State& state) {
  const Int bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate(Window{bound}, F3()));
  }
}
BENCHMARK(BM_WindowEnumerate)->Arg(6)->Arg(12);

void BM_AssociativityScan(benchmark::State& state) {
  const Int bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(suites::associativity(bound));
  }
}
BENCHMARK(BM_AssociativityScan)->Arg(3)->Arg(4);

void BM_DecomposeRoundtrip(benchmark::State& state) {
  const NormalForm f{4, 3, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(tabulate(f, state.range(0))));
  }
}
BENCHMARK(BM_DecomposeRoundtrip)->Arg(8)->Arg(16);

void BM_ScanExclusions(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_exclusions(3, 2));
  }
}
BENCHMARK(BM_ScanExclusions);

}  // namespace

BENCHMARK_MAIN();

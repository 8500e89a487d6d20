#include <benchmark/benchmark.h>

#include "ietrel/random.hpp"
#include "ietrel/rational_tools.hpp"
#include "ietrel/relation.hpp"

using namespace ietrel;

namespace {

Iet three_swap() { return Iet({Scalar(3, 10), Scalar(1, 5), Scalar(1, 2)}, Permutation({2, 1, 3})); }

void BM_Compose(benchmark::State& state) {
  Rng rng(1);
  const bool cubic = state.range(1) != 0;
  const Iet a = random_iet(rng, static_cast<int>(state.range(0)), cubic);
  const Iet b = random_iet(rng, static_cast<int>(state.range(0)), cubic);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->ArgsProduct({{3, 5, 8}, {0, 1}});

void BM_Power(benchmark::State& state) {
  Rng rng(2);
  const Iet t = random_iet(rng, 4, state.range(1) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(power(t, state.range(0)));
}
BENCHMARK(BM_Power)->ArgsProduct({{120, 30721}, {0, 1}});

void BM_CertifyRotation(benchmark::State& state) {
  const Iet s = Iet::rotation(Scalar(1, 3));
  const Iet t0 = Iet::rotation(Scalar(1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(certify_relation(s, t0, 5));
}
BENCHMARK(BM_CertifyRotation)->Unit(benchmark::kMillisecond);

void BM_CertifyThreeSwap(benchmark::State& state) {
  const Iet s = three_swap();
  const Iet t0 = Iet::rotation(Scalar(1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(certify_relation(s, t0, 5));
}
BENCHMARK(BM_CertifyThreeSwap)->Unit(benchmark::kMillisecond);

void BM_CertifyCubic(benchmark::State& state) {
  const Iet s = arnoux_yoccoz().g;
  const Iet t0 = Iet::rotation(Scalar(1, 5));
  for (auto _ : state) benchmark::DoNotOptimize(certify_relation(s, t0, 5));
}
BENCHMARK(BM_CertifyCubic)->Unit(benchmark::kMillisecond);

void BM_SweepRow(benchmark::State& state) {
  const Iet f = arnoux_yoccoz().f;
  for (auto _ : state) benchmark::DoNotOptimize(ay_sweep_row(f, state.range(0)));
}
BENCHMARK(BM_SweepRow)->Arg(100)->Arg(2000);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ay_sweep(20, 400, 1));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

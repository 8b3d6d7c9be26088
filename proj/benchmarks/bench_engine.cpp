#include <benchmark/benchmark.h>

#include "ihiggs/engine.hpp"

namespace {

void BM_IpMPipeline(benchmark::State& state) {
  const ihiggs::Genus g(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ihiggs::engine::ip_m_pipeline(g));
}
BENCHMARK(BM_IpMPipeline)->DenseRange(2, 30, 4)->Unit(benchmark::kMillisecond);

void BM_IpMClosed(benchmark::State& state) {
  const ihiggs::Genus g(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ihiggs::engine::ip_m_closed(g));
}
BENCHMARK(BM_IpMClosed)->DenseRange(2, 30, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyGenus(benchmark::State& state) {
  const ihiggs::Genus g(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ihiggs::engine::verify_genus(g));
}
BENCHMARK(BM_VerifyGenus)->Arg(5)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace

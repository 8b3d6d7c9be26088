#include <random>

#include <benchmark/benchmark.h>

#include "ihiggs/polynomial.hpp"

namespace {

ihiggs::Polynomial random_poly(std::size_t degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<mpz_class> c(degree + 1);
  for (auto& x : c) x = static_cast<unsigned long>(rng() >> 1);
  return ihiggs::Polynomial(std::move(c));
}

void BM_Mul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(n, 1), b = random_poly(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mul)->RangeMultiplier(2)->Range(8, 512)->Complexity();

void BM_ExactDiv(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_poly(n, 3), b = random_poly(n / 2, 4);
  const auto prod = a * b;
  for (auto _ : state) benchmark::DoNotOptimize(ihiggs::exact_div(prod, b));
}
BENCHMARK(BM_ExactDiv)->RangeMultiplier(2)->Range(8, 512);

void BM_BinomialPower(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(ihiggs::binomial_power(-1, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_BinomialPower)->Arg(4)->Arg(20)->Arg(60);

}  // namespace

#include <benchmark/benchmark.h>

#include <random>

#include "dposet/dposet.hpp"

using namespace dposet;

namespace {

std::vector<DoublePoset> sample(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DoublePoset> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_double_poset(n, rng));
  return out;
}

void BM_Canonicalize(benchmark::State& state) {
  const auto posets = sample(static_cast<int>(state.range(0)), 64, 1);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(posets[i++ % posets.size()]));
}
BENCHMARK(BM_Canonicalize)->DenseRange(4, 10, 2);

void BM_Pictures(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = sample(n, 32, 2), b = sample(n, 32, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pairing_basis(a[i % a.size()], b[(i / a.size()) % b.size()]));
    ++i;
  }
}
BENCHMARK(BM_Pictures)->DenseRange(4, 8, 2);

void BM_Antipode(benchmark::State& state) {
  const auto posets = sample(static_cast<int>(state.range(0)), 16, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(antipode(basis(posets[i++ % posets.size()])));
}
BENCHMARK(BM_Antipode)->DenseRange(3, 6, 1);

void BM_Gamma(benchmark::State& state) {
  const auto posets = sample(static_cast<int>(state.range(0)), 16, 5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gamma(posets[i++ % posets.size()]));
}
BENCHMARK(BM_Gamma)->DenseRange(3, 7, 2);

void BM_LatticeWords(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition nu({(n + 1) / 2, n / 2});
  for (auto _ : state) benchmark::DoNotOptimize(lattice_words(nu));
}
BENCHMARK(BM_LatticeWords)->DenseRange(4, 12, 4);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "symproj/encoding.hpp"
#include "symproj/fermion.hpp"
#include "symproj/projectors.hpp"
#include "symproj/simulator.hpp"

using namespace symproj;

namespace {

PauliSum random_sum(std::size_t n, std::size_t terms, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  std::normal_distribution<double> coeff;
  PauliSum s(n);
  for (std::size_t k = 0; k < terms; ++k) s.add_term(PauliWord(n, mask(rng), mask(rng)), coeff(rng));
  return s;
}

void BM_SumMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto terms = static_cast<std::size_t>(state.range(0));
  const PauliSum a = random_sum(12, terms, rng), b = random_sum(12, terms, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_SumMultiply)->RangeMultiplier(4)->Range(16, 1024);

void BM_Apply(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const PauliSum op = random_sum(n, 100, rng);
  Eigen::VectorXcd v = Eigen::VectorXcd::Random(Eigen::Index{1} << n);
  const StateVector s(n, v.normalized());
  for (auto _ : state) benchmark::DoNotOptimize(apply(op, s));
}
BENCHMARK(BM_Apply)->DenseRange(6, 14, 4);

void BM_CircleProjector(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const PauliSum num = encode_operator(number_operator(n), Encoding(EncodingKind::kBravyiKitaev, n));
  for (auto _ : state) benchmark::DoNotOptimize(circle_integral_projector(num, static_cast<double>(n / 2)));
}
BENCHMARK(BM_CircleProjector)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "rootbound/cli/cli.hpp"
#include "rootbound/oracle.hpp"

namespace {

using namespace rootbound;

DomainSpec su_case(int p) { return SuSpec{p, 3, p / 2, 1}; }

void BM_ReportSu(benchmark::State& state) {
  const auto spec = su_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(report(spec));
}
BENCHMARK(BM_ReportSu)->DenseRange(2, 8, 2);

void BM_ReportSp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DomainSpec spec = SpSpec{n, 1, n / 2};
  for (auto _ : state) benchmark::DoNotOptimize(report(spec));
}
BENCHMARK(BM_ReportSp)->DenseRange(3, 9, 2);

void BM_Linearization(benchmark::State& state) {
  const DomainSpec spec = SpSpec{static_cast<int>(state.range(0)), 1, 2};
  const auto part = partition(spec);
  const auto basis = oracle::build_basis(spec);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::Linearization(part, basis));
}
BENCHMARK(BM_Linearization)->DenseRange(4, 6);

void BM_RandomCodim(benchmark::State& state) {
  const DomainSpec spec = SpSpec{static_cast<int>(state.range(0)), 1, 2};
  const auto part = partition(spec);
  const oracle::Linearization lin(part, oracle::build_basis(spec));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::s_hat_codim(oracle::random_functional(seed++, part), lin));
}
BENCHMARK(BM_RandomCodim)->DenseRange(4, 6);

void BM_Rank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<int>((i * 7 + j * 13) % 11) - 5;
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(4, 32);

void BM_VerifyInstance(benchmark::State& state) {
  const DomainSpec spec = SpSpec{4, 1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(cli::verify_instance(spec, 10, 0));
}
BENCHMARK(BM_VerifyInstance);

}  // namespace

BENCHMARK_MAIN();

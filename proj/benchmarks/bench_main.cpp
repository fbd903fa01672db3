#include <benchmark/benchmark.h>

#include "mr6v/formulas.hpp"
#include "mr6v/homogeneous.hpp"
#include "mr6v/matrix.hpp"
#include "mr6v/oracle.hpp"
#include "mr6v/rng.hpp"
#include "mr6v/thermo.hpp"

namespace {

using namespace mr6v;

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  RationalSampler rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.rational(30, 17);
  return m;
}

InhomParams bench_params(std::size_t n, std::size_t m) {
  std::vector<Rational> u, v;
  for (std::size_t i = 0; i < n; ++i) u.emplace_back(Rational(2 * static_cast<long>(i) + 1, 3));
  for (std::size_t j = 0; j < m; ++j) v.emplace_back(Rational(-(static_cast<long>(j) + 5), 7));
  return InhomParams(std::move(u), std::move(v), Rational(1));
}

Boundary bench_boundary() {
  return Boundary({Rational(1), Rational(2)}, {Rational(1), Rational(1)},
                  {Rational(1), Rational(0)}, {Rational(1), Rational(1)});
}

void BM_BareissDet(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.det());
  }
}
BENCHMARK(BM_BareissDet)->Arg(4)->Arg(8)->Arg(12);

void BM_OracleContraction(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const InhomParams p = bench_params(n, n);
  const Boundary b = bench_boundary();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::partition_bruteforce(p, b));
  }
}
BENCHMARK(BM_OracleContraction)->Arg(3)->Arg(5)->Arg(8);

void BM_BlockFormula(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const InhomParams p = bench_params(n, n);
  const Boundary b = bench_boundary();
  for (auto _ : state) {
    benchmark::DoNotOptimize(formulas::partition_block(p, b));
  }
}
BENCHMARK(BM_BlockFormula)->Arg(3)->Arg(6);

void BM_HomogeneousDet(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Boundary b = bench_boundary();
  const homog::HomogParams hp{Rational(1, 3), Rational(1), n, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(homog::partition_homogeneous(hp, b));
  }
}
BENCHMARK(BM_HomogeneousDet)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();

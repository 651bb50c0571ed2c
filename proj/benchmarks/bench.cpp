#include <benchmark/benchmark.h>

#include <vector>

#include <jackpoly/bessel.hpp>
#include <jackpoly/jack.hpp>
#include <jackpoly/partition.hpp>
#include <jackpoly/rational.hpp>
#include <jackpoly/shifted.hpp>

namespace {

using namespace jackpoly;

// Shapes scale with the argument: partition (k, k-1, ..., 1) of size k(k+1)/2.
Partition staircase(int k) {
  std::vector<int> parts(k);
  for (int i = 0; i < k; ++i) parts[i] = k - i;
  return Partition(parts);
}

void BM_jack_combinatorial(benchmark::State& state) {
  const Partition mu = staircase(static_cast<int>(state.range(0)));
  const JackParams params(mu.length() + 1, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(jack_combinatorial(mu, params));
}
BENCHMARK(BM_jack_combinatorial)->DenseRange(1, 4);

void BM_jack_by_branching(benchmark::State& state) {
  const Partition mu = staircase(static_cast<int>(state.range(0)));
  const JackParams params(mu.length() + 1, Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(jack_by_branching(mu, params));
}
BENCHMARK(BM_jack_by_branching)->DenseRange(1, 4);

void BM_sekiguchi_apply(benchmark::State& state) {
  const Partition mu = staircase(static_cast<int>(state.range(0)));
  const JackParams params(mu.length() + 1, Rational(1, 2));
  const MultiPoly p = jack_combinatorial(mu, params);
  for (auto _ : state) benchmark::DoNotOptimize(sekiguchi_apply(p, Rational(1), params.theta));
}
BENCHMARK(BM_sekiguchi_apply)->DenseRange(1, 3);

void BM_shifted_eval(benchmark::State& state) {
  const Partition mu = staircase(static_cast<int>(state.range(0)));
  const Partition lambda = staircase(static_cast<int>(state.range(0)) + 1);
  const JackParams params(lambda.length(), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(shifted_eval(mu, lambda, params));
}
BENCHMARK(BM_shifted_eval)->DenseRange(1, 4);

void BM_bessel_series(benchmark::State& state) {
  const std::vector<double> l{2.0, 1.0, 0.5};
  const std::vector<double> x{0.3, 0.2, 0.1};
  const int cut = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_series(l, x, Rational(1, 2), cut));
}
BENCHMARK(BM_bessel_series)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "dilator/dilation.hpp"
#include "dilator/circle.hpp"
#include "dilator/interaction.hpp"
#include "dilator/linalg.hpp"

using namespace dilator;

namespace {

Cocycle biased() {
  const ShiftSystem sys({2});
  return Cocycle(sys,
                 {CylinderFunction(sys, LatticeElement({1}), {Rational(1, 3), Rational(2, 3)})},
                 CocycleMode::strict);
}

void BM_extend(benchmark::State& state) {
  const Cocycle c = biased();
  const LatticeElement level({state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(c.extend(level));
}
BENCHMARK(BM_extend)->DenseRange(2, 10, 2);

void BM_transfer(benchmark::State& state) {
  const InteractionSystem is(biased());
  const auto basis = indicator_basis(is.system(), LatticeElement({state.range(0)}));
  const LatticeElement one_step({1});
  for (auto _ : state)
    for (const auto& f : basis) benchmark::DoNotOptimize(is.transfer(one_step, f));
}
BENCHMARK(BM_transfer)->DenseRange(2, 6, 2);

void BM_axiom_suite(benchmark::State& state) {
  const InteractionSystem is(biased());
  for (auto _ : state) benchmark::DoNotOptimize(axiom_suite(is, state.range(0), 1));
}
BENCHMARK(BM_axiom_suite)->DenseRange(1, 3);

void BM_dilation_suite(benchmark::State& state) {
  const DilationAlgebra dil{InteractionSystem(biased())};
  for (auto _ : state) benchmark::DoNotOptimize(dilation_suite(dil, 2, state.range(0)));
}
BENCHMARK(BM_dilation_suite)->DenseRange(1, 2);

void BM_solenoid_sum(benchmark::State& state) {
  const MonomialIndex m(std::map<int, long long>{{static_cast<int>(state.range(0)), 1}, {0, 2}});
  const std::complex<double> x = std::polar(1.0, 0.7);
  for (auto _ : state)
    benchmark::DoNotOptimize(solenoid_expectation(m, x, SolenoidMode::sum));
}
BENCHMARK(BM_solenoid_sum)->DenseRange(4, 12, 2);

void BM_rref(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(n, n / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n / 2; ++j)
      m.at(i, j) = Rational(static_cast<long long>(rng() % 19) - 9,
                            1 + static_cast<long long>(rng() % 7));
  for (auto _ : state) benchmark::DoNotOptimize(m.rref());
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(16, 64);

}  // namespace

BENCHMARK_MAIN();

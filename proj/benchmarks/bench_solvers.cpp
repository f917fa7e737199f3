#include "sexroot/digit_solver.hpp"
#include "sexroot/geometry.hpp"
#include "sexroot/newton_solver.hpp"
#include "sexroot/secant_solver.hpp"

#include <benchmark/benchmark.h>

using namespace sexroot;

namespace {

const SexNum kOne = SexNum::from_digits(1, {1}, {});
const SexNum kTwo = SexNum::from_digits(1, {2}, {});

void BM_DigitByDigit(benchmark::State& state, DivisorStrategy strategy, DigitSearch search) {
  const Poly p = cubics::fibonacci();
  const int places = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_digit_by_digit(p, kOne, places, strategy, 60, {1, search}));
  }
}
BENCHMARK_CAPTURE(BM_DigitByDigit, horner, DivisorStrategy::horner_holdred(),
                  DigitSearch::BoundThenVerify)->Arg(6)->Arg(11)->Arg(20);
BENCHMARK_CAPTURE(BM_DigitByDigit, viete, DivisorStrategy::viete(), DigitSearch::BoundThenVerify)
    ->Arg(6)->Arg(11)->Arg(20);
BENCHMARK_CAPTURE(BM_DigitByDigit, ascending, DivisorStrategy::viete(), DigitSearch::Ascending)
    ->Arg(6)->Arg(11);

void BM_Gram(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_gram());
}
BENCHMARK(BM_Gram);

void BM_Vetter(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_vetter(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Vetter)->Arg(9)->Arg(15);

void BM_RegulaFalsi(benchmark::State& state) {
  const Poly p = cubics::fibonacci();
  for (auto _ : state) benchmark::DoNotOptimize(regula_falsi_fixed(p, kOne, kTwo, 6, 20));
}
BENCHMARK(BM_RegulaFalsi);

void BM_Glushkov(benchmark::State& state) {
  const Poly p = cubics::fibonacci();
  for (auto _ : state) benchmark::DoNotOptimize(secant_glushkov(p, kOne, kTwo, 18));
}
BENCHMARK(BM_Glushkov);

void BM_Cardano(benchmark::State& state) {
  const int places = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cardano_reference(places));
}
BENCHMARK(BM_Cardano)->Arg(11)->Arg(30);

void BM_GeometryIdentity(benchmark::State& state) {
  const auto c = ConicConstruction::fibonacci_circle_hyperbola();
  for (auto _ : state) benchmark::DoNotOptimize(verify_identity(c));
}
BENCHMARK(BM_GeometryIdentity);

}  // namespace

BENCHMARK_MAIN();

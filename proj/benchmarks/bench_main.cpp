#include <benchmark/benchmark.h>

#include "efoc/dobinski.hpp"
#include "efoc/operators.hpp"
#include "efoc/polynomial.hpp"
#include "efoc/stirling.hpp"

using namespace efoc;

static void BM_StirlingTableGauss(benchmark::State& state) {
  const auto seq = PsiSequence::gauss_q(Rational(1, 2));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const StirlingTable table(seq, StirlingVariant::SecondTilde);
    benchmark::DoNotOptimize(table.row_sum(n));
  }
}
BENCHMARK(BM_StirlingTableGauss)->Arg(16)->Arg(32)->Arg(64);

static void BM_SeriesInverse(benchmark::State& state) {
  const auto seq = PsiSequence::fibonomial();
  const int order = static_cast<int>(state.range(0));
  std::vector<Rational> coeffs(static_cast<size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) coeffs[static_cast<size_t>(k)] = Rational(k + 1, k + 2);
  const OperatorSeries s(seq, coeffs, order);
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(s));
}
BENCHMARK(BM_SeriesInverse)->Arg(8)->Arg(16)->Arg(32);

static void BM_DobinskiPartial(benchmark::State& state) {
  const auto seq = PsiSequence::classical();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dobinski_partial(seq, 8, TruncationSpec::square(level)));
}
BENCHMARK(BM_DobinskiPartial)->Arg(16)->Arg(32)->Arg(64);

static void BM_ToFallingBasis(benchmark::State& state) {
  const auto seq = PsiSequence::gauss_q(Rational(3, 7));
  const int n = static_cast<int>(state.range(0));
  const auto p = Polynomial::monomial(n);
  for (auto _ : state) benchmark::DoNotOptimize(to_basis(p, seq, BasisKind::PsiFalling));
}
BENCHMARK(BM_ToFallingBasis)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();

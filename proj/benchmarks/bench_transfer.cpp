#include <benchmark/benchmark.h>

#include "appell/appell_vector.hpp"
#include "appell/families.hpp"
#include "appell/matrix.hpp"

namespace {

using appell::FamilyKind;
using appell::FamilySpec;
using appell::Rat;

void BM_TransferMatrix(benchmark::State& state, FamilyKind kind) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const FamilySpec spec = FamilySpec::simple(kind);
  for (auto _ : state) {
    benchmark::DoNotOptimize(appell::transfer_matrix(spec, m));
  }
}
BENCHMARK_CAPTURE(BM_TransferMatrix, bernoulli, FamilyKind::Bernoulli)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_TransferMatrix, euler, FamilyKind::Euler)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK_CAPTURE(BM_TransferMatrix, hermite, FamilyKind::HermiteMonic)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesPowerPath(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  appell::RatVector c(m + 1);
  for (std::size_t n = 0; n <= m; ++n) c[n] = Rat(static_cast<long>(n) + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(appell::series_of_H(c, m));
}
BENCHMARK(BM_SeriesPowerPath)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesClosedForm(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  appell::RatVector c(m + 1);
  for (std::size_t n = 0; n <= m; ++n) c[n] = Rat(static_cast<long>(n) + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(appell::series_of_H_closed_form(c, m));
}
BENCHMARK(BM_SeriesClosedForm)->Arg(8)->Arg(16)->Arg(32);

void BM_TriangularInverse(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto p = appell::pascal_generalized(m, Rat(1)) + appell::LTMatrix::identity(m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(appell::lt_inverse(p));
}
BENCHMARK(BM_TriangularInverse)->Arg(8)->Arg(16)->Arg(32);

// Matrix route vs. gamma recurrence for the same values.
void BM_EvaluateMatrix(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto av = appell::appell_vector(FamilySpec::simple(FamilyKind::Bernoulli), m);
  const Rat x(-37, 11);
  for (auto _ : state) benchmark::DoNotOptimize(appell::evaluate(av, x));
}
BENCHMARK(BM_EvaluateMatrix)->Arg(8)->Arg(16)->Arg(32);

void BM_EvaluateRecurrence(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const auto gamma = appell::gamma_coefficients(FamilySpec::simple(FamilyKind::Bernoulli), m);
  const Rat x(-37, 11);
  for (auto _ : state) benchmark::DoNotOptimize(appell::recurrence_eval_from_gamma(gamma, x));
}
BENCHMARK(BM_EvaluateRecurrence)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();

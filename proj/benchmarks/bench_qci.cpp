#include <benchmark/benchmark.h>

#include "qci/examples.hpp"
#include "qci/generic.hpp"
#include "qci/homotopy.hpp"
#include "qci/koszul.hpp"

using namespace qci;

namespace {

template <Field K>
void BM_BuchbergerExampleB(benchmark::State& state, K field) {
  const auto ex = make_example_b(field);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ex.polynomials, ex.relations));
}
BENCHMARK_CAPTURE(BM_BuchbergerExampleB, F101, PrimeField(101));
BENCHMARK_CAPTURE(BM_BuchbergerExampleB, QQ, RationalField{});

void BM_QuotientSquareCI(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(make_square_ci(PrimeField(101), n));
  state.counters["dim"] = static_cast<double>(1 << n);
}
BENCHMARK(BM_QuotientSquareCI)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_QuotientRandomQuadrics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = sample_quadrics(n, PrimeField(101), 1);
  for (auto _ : state) benchmark::DoNotOptimize(QuotientRing<PrimeField>::build(s.forms));
}
BENCHMARK(BM_QuotientRandomQuadrics)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_KoszulHomologyExampleB(benchmark::State& state) {
  const auto ex = make_example_b(PrimeField(101));
  for (auto _ : state) {
    const KoszulComplex<PrimeField> e(ex.ring, {ex.f1, ex.f2});
    benchmark::DoNotOptimize(homology_report(e));
  }
}
BENCHMARK(BM_KoszulHomologyExampleB)->Unit(benchmark::kMicrosecond);

void BM_QciCheckExampleB(benchmark::State& state) {
  const auto ex = make_example_b(PrimeField(101));
  for (auto _ : state) benchmark::DoNotOptimize(qci_check<PrimeField>(ex.ring, {ex.f1, ex.f2}));
}
BENCHMARK(BM_QciCheckExampleB)->Unit(benchmark::kMicrosecond);

void BM_ResidueFieldResolution(benchmark::State& state) {
  const auto ex = make_example_b(PrimeField(101));
  const int hd = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(residue_field_resolution(ex.ring, hd));
}
BENCHMARK(BM_ResidueFieldResolution)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_AmbientBetti(benchmark::State& state) {
  const auto ex = make_example_b(PrimeField(32003));
  for (auto _ : state) benchmark::DoNotOptimize(ambient_betti(ex.ring));
}
BENCHMARK(BM_AmbientBetti)->Unit(benchmark::kMillisecond);

void BM_QuadraticDualCenter(benchmark::State& state) {
  const auto ex = make_example_b(PrimeField(101));
  for (auto _ : state) {
    const auto dual = QuadraticDual<PrimeField>::build(ex.polynomials, ex.relations);
    benchmark::DoNotOptimize(degree2_center(dual));
  }
}
BENCHMARK(BM_QuadraticDualCenter)->Unit(benchmark::kMillisecond);

void BM_EzdSearchInsideIdealF5(benchmark::State& state) {
  const auto ex = make_example_b(PrimeField(5));
  EzdOptions o;
  o.inside_ideal = true;
  o.max_degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ezd_search<PrimeField>(ex.ring, {ex.f1, ex.f2}, o));
}
BENCHMARK(BM_EzdSearchInsideIdealF5)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_PencilXTest(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = sample_quadrics(n, PrimeField(101), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pencil_reducible_search(s.forms, PencilMode::exact));
}
BENCHMARK(BM_PencilXTest)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LinearSieve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = sample_quadrics(n, PrimeField(101), 3);
  const auto ring = QuotientRing<PrimeField>::build(s.forms);
  for (auto _ : state) {
    Rng rng = derived_stream(3, 0);
    benchmark::DoNotOptimize(linear_exact_zero_divisors(ring, rng));
  }
}
BENCHMARK(BM_LinearSieve)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LinearSieve)->Arg(5)->Iterations(1)->Unit(benchmark::kMillisecond);

void BM_WitnessMatrixCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(witness_matrix_check(PrimeField(101), n));
}
BENCHMARK(BM_WitnessMatrixCheck)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_ExperimentTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(n, 101, 1, 11));
}
BENCHMARK(BM_ExperimentTrial)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

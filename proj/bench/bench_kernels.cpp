// OpenMP kernels against their serial references.

#include "gzeta/kernels.hpp"
#include "gzeta/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace gzeta;

namespace {

const HilbertSeries& sample_series() {
  static const HilbertSeries s(WeightSeq({1, 2, 3}), RatPolynomial::from_integers({1, 1, 0, -1}));
  return s;
}

template <auto Kernel>
void BM_dirichlet(benchmark::State& state) {
  const auto coeffs = kernels::hilbert_values(sample_series(), state.range(0));
  const Complex z(5.5, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(coeffs, 0.5, z, 0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <auto Kernel>
void BM_grid(benchmark::State& state) {
  const ZetaFunction zeta(sample_series());
  std::vector<Complex> pts;
  const long side = state.range(0);
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side; ++j) pts.emplace_back(-2.0 + 6.0 * (i + 0.5) / side, -3.0 + 6.0 * (j + 0.5) / side);
  const EvalConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(zeta, pts, 0.75, cfg));
  state.SetItemsProcessed(state.iterations() * side * side);
}

}  // namespace

BENCHMARK(BM_dirichlet<kernels::dirichlet_sum>)->Name("dirichlet_sum/omp")->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(BM_dirichlet<kernels::dirichlet_sum_serial>)->Name("dirichlet_sum/serial")->Arg(1 << 14)->Arg(1 << 18)->Arg(1 << 21);
BENCHMARK(BM_grid<kernels::evaluate_grid>)->Name("evaluate_grid/omp")->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grid<kernels::evaluate_grid_serial>)->Name("evaluate_grid/serial")->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

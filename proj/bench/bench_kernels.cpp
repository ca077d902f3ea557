#include <benchmark/benchmark.h>

#include "liepic/s_matrix.hpp"
#include "liepic/verlinde.hpp"

using namespace liepic;

namespace {

const kernels::VerlindeProblem& verlinde_problem() {
  static const auto p = make_verlinde_problem(RootDatum::build(LieType(Series::G, 2)), 3, 24, 256);
  return p;
}

void BM_VerlindeTermsSerial(benchmark::State& state) {
  const auto& p = verlinde_problem();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::verlinde_terms_serial(p));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(p.alcove.size()));
}

void BM_VerlindeTermsOpenMP(benchmark::State& state) {
  const auto& p = verlinde_problem();
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::verlinde_terms_openmp(p, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(p.alcove.size()));
}

void BM_SMatrix(benchmark::State& state, kernels::Backend backend) {
  const auto d = RootDatum::build(LieType(Series::A, 2));
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kac_peterson_S(d, 6, 256, backend, jobs));
}

}  // namespace

BENCHMARK(BM_VerlindeTermsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerlindeTermsOpenMP)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SMatrix, serial, kernels::Backend::Serial)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_SMatrix, openmp, kernels::Backend::OpenMP)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "nashcert/kernels.hpp"
#include "nashcert/poly_text.hpp"

namespace {

using nashcert::CompiledPoly;

// Real part of sqrt(1 + z^2) squared twice; a dense quartic in x, y, t.
const CompiledPoly& workload() {
  static const CompiledPoly p(nashcert::parse_poly(
      "t^4 - 2*t^2*x1^2 + 2*t^2*y1^2 - 2*t^2 + x1^4 + 2*x1^2*y1^2 + 2*x1^2 + y1^4 - 2*y1^2 + 1",
      nashcert::VarSpace::real(1)));
  return p;
}

std::vector<std::vector<std::complex<double>>> batch(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<std::vector<std::complex<double>>> out(n, std::vector<std::complex<double>>(workload().width()));
  for (auto& row : out) {
    for (auto& v : row) v = {u(rng), 0.0};
  }
  return out;
}

void BM_Serial(benchmark::State& state) {
  const auto pts = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nashcert::batch_residuals_serial(workload(), pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Parallel(benchmark::State& state) {
  const auto pts = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nashcert::batch_residuals_parallel(workload(), pts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_Serial)->Arg(64)->Arg(4096)->Arg(262144);
BENCHMARK(BM_Parallel)->Arg(64)->Arg(4096)->Arg(262144);

}  // namespace

BENCHMARK_MAIN();

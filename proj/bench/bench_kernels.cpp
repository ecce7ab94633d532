// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "etu/kernels.hpp"
#include "etu/parabolic_cylinder.hpp"

namespace {

using etu::UniformGrid;
using etu::kernels::Complex;

template <auto Kernel>
void fourier_sum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const UniformGrid x = UniformGrid::centered(16.0 / static_cast<double>(n), n);
  const UniformGrid y = UniformGrid::centered(0.5, n);
  std::vector<Complex> in(n), out(n);
  for (std::size_t i = 0; i < n; ++i) in[i] = std::exp(-0.5 * x.at(i) * x.at(i));
  for (auto _ : state) {
    Kernel(x, in, y, -1.0, etu::kernels::EndWeights::trapezoid, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}

template <auto Kernel>
void tabulate_dnu(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<double> xs = UniformGrid::from_range(-4.0, 6.0, n).nodes();
  std::vector<double> out(n);
  const etu::RealFunction f = [](double z) { return etu::parabolic_cylinder_d(-0.205, z); };
  for (auto _ : state) {
    Kernel(f, xs, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <auto Kernel>
void phase_space(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const UniformGrid g = UniformGrid::from_range(-6.0, 6.0, n);
  const etu::kernels::PhaseSpaceFunction w = [](double q, double p) { return std::exp(-q * q - p * p + 0.3 * q * p); };
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(w, g, g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n));
}

}  // namespace

BENCHMARK(fourier_sum<etu::kernels::serial::fourier_sum>)->Name("fourier_sum/serial")->Arg(1024)->Arg(4096);
BENCHMARK(fourier_sum<etu::kernels::parallel::fourier_sum>)->Name("fourier_sum/parallel")->Arg(1024)->Arg(4096)->UseRealTime();
BENCHMARK(tabulate_dnu<etu::kernels::serial::tabulate>)->Name("tabulate_Dnu/serial")->Arg(256);
BENCHMARK(tabulate_dnu<etu::kernels::parallel::tabulate>)->Name("tabulate_Dnu/parallel")->Arg(256)->UseRealTime();
BENCHMARK(phase_space<etu::kernels::serial::phase_space_trapezoid>)->Name("phase_space/serial")->Arg(512)->Arg(1024);
BENCHMARK(phase_space<etu::kernels::parallel::phase_space_trapezoid>)->Name("phase_space/parallel")->Arg(512)->Arg(1024)->UseRealTime();

BENCHMARK_MAIN();

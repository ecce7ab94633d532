#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "etu/kernels.hpp"

using namespace etu;
using kernels::Complex;

namespace {

// Textbook O(N M) sum with std::polar at every node.
std::vector<Complex> naive_sum(const UniformGrid& x, const std::vector<Complex>& in, const UniformGrid& y, double sign,
                               bool trapezoid) {
  std::vector<Complex> out(y.size);
  for (std::size_t k = 0; k < y.size; ++k)
    for (std::size_t j = 0; j < x.size; ++j) {
      const double w = trapezoid && (j == 0 || j + 1 == x.size) ? 0.5 : 1.0;
      out[k] += w * in[j] * std::polar(1.0, sign * y.at(k) * x.at(j));
    }
  return out;
}

}  // namespace

TEST_CASE("serial and parallel Fourier sums agree with direct summation") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> n01;
  const UniformGrid x{-3.1, 0.013, 501};
  const UniformGrid y{-40.0, 0.17, 457};
  std::vector<Complex> in(x.size);
  for (auto& c : in) c = {n01(rng), n01(rng)};
  for (bool trap : {false, true}) {
    const auto ends = trap ? kernels::EndWeights::trapezoid : kernels::EndWeights::none;
    std::vector<Complex> a(y.size), b(y.size);
    kernels::serial::fourier_sum(x, in, y, -1.0, ends, a);
    kernels::parallel::fourier_sum(x, in, y, -1.0, ends, b);
    const auto ref = naive_sum(x, in, y, -1.0, trap);
    double scale = 0.0;
    for (const auto& c : ref) scale = std::max(scale, std::abs(c));
    for (std::size_t k = 0; k < y.size; ++k) {
      CHECK(std::abs(a[k] - b[k]) == 0.0);
      CHECK(std::abs(a[k] - ref[k]) < 1e-11 * scale);
    }
  }
}

TEST_CASE("serial and parallel tabulation agree") {
  std::vector<double> xs(1000), a(xs.size()), b(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = 0.01 * static_cast<double>(i);
  auto f = [](double v) { return std::sin(v) * std::exp(-v); };
  kernels::serial::tabulate(f, xs, a);
  kernels::parallel::tabulate(f, xs, b);
  CHECK(a == b);
}

TEST_CASE("parallel tabulation propagates exceptions") {
  std::vector<double> xs(64, 1.0), out(64);
  xs[17] = -1.0;
  auto f = [](double v) {
    if (v < 0.0) throw std::runtime_error("negative");
    return v;
  };
  CHECK_THROWS_AS(kernels::parallel::tabulate(f, xs, out), std::runtime_error);
}

TEST_CASE("phase-space trapezoid is deterministic and exact for Gaussians") {
  const UniformGrid q = UniformGrid::from_range(-8.0, 8.0, 321);
  const UniformGrid p = UniformGrid::from_range(-9.0, 9.0, 257);
  auto g = [](double a, double b) { return std::exp(-0.5 * a * a - 0.5 * b * b + 0.3 * a * b); };
  const double s = kernels::serial::phase_space_trapezoid(g, q, p);
  const double par = kernels::parallel::phase_space_trapezoid(g, q, p);
  CHECK(s == par);
  // det [[1, -0.3], [-0.3, 1]] = 0.91
  CHECK(s == doctest::Approx(2.0 * M_PI / std::sqrt(0.91)).epsilon(1e-10));
}

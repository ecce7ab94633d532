#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "etu/decay_times.hpp"
#include "etu/error.hpp"
#include "etu/extremal.hpp"
#include "etu/parabolic_cylinder.hpp"
#include "etu/quadrature.hpp"

using namespace etu;
using std::numbers::pi;

namespace {

const ExtremalSolution& solution() {
  static const ExtremalSolution s = extremal_solution();
  return s;
}

const double gaussian_value = std::sqrt((pi - 2) / (4 * pi));

}  // namespace

TEST_CASE("minimal product") {
  const double mu = solve_mu();
  CHECK(mu == doctest::Approx(0.29505306).epsilon(3e-8));
  CHECK(std::abs(mu_cross_check(mu)) < 1e-6);
  CHECK(std::abs(parabolic_cylinder_d_derivative(mu - 0.5, -2 * std::sqrt(mu))) < 1e-8);
  CHECK(mu > schwartz_lower_bound());
  CHECK(mu < gaussian_value);
  CHECK(mu_equation(0.5) > 0);
  CHECK(mu_equation(0.6) < 0);
}

TEST_CASE("mu equation against the raw integral") {
  // Direct evaluation in t with the singular end handled by splitting.
  for (double rho : {0.52, 0.55, 0.58}) {
    auto g = [rho](double t) { return std::exp(2 * rho * t - 0.5 * t * t) * std::pow(t, -rho * rho - 0.5) * (t - rho); };
    const double e = 0.5 - rho * rho;
    const double eps = 1e-8;
    // int_0^eps t^(e-1) (t - rho) exp(...) ~ -rho eps^e / e to leading order.
    const double head = -rho * std::pow(eps, e) / e;
    const double body = integrate(g, eps, 1.0, QuadratureSpec{1e-11, 1e-11}) + integrate(g, 1.0, 50.0);
    CHECK(mu_equation(rho) == doctest::Approx(head + body).epsilon(1e-5));
  }
}

TEST_CASE("extremal spectrum moments") {
  const auto& s = solution();
  CHECK(s.c == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(s.b == doctest::Approx(1.5 * s.c * s.c).epsilon(1e-6));
  CHECK(s.a * s.b / 3 == doctest::Approx(s.mu * s.mu).epsilon(1e-8));
  const SpreadMoments pm = positive_frequency_moments(s.spectrum);
  const SpreadMoments tm = time_moments(s.spectrum);
  CHECK(pm.mean == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(tm.mean == doctest::Approx(0.0));
  CHECK(tm.spread * pm.spread == doctest::Approx(s.mu).epsilon(1e-4));
  CHECK(std::sqrt(product_functional(s.half, s.half_values)) == doctest::Approx(s.mu).epsilon(1e-6));
  s.spectrum.check_normalized();
}

TEST_CASE("extremal spectrum at another scale") {
  const SignalPair p = extremal_spectrum(solve_mu(), 2.5, 1024);
  CHECK(positive_frequency_moments(p).mean == doctest::Approx(2.5).epsilon(1e-4));
  CHECK(time_moments(p).spread * positive_frequency_moments(p).spread == doctest::Approx(solve_mu()).epsilon(1e-4));
  CHECK_THROWS_AS(extremal_spectrum(0.7, 1.0), Error);
  CHECK_THROWS_AS(extremal_spectrum(0.3, -1.0), Error);
}

TEST_CASE("flatness at the origin and the Euler-Lagrange equation") {
  const auto& s = solution();
  const auto& F = s.half_values;
  const double h = s.half.step;
  // One-sided differences that do not use the even extension.
  const double d1 = (-25 * F[0] + 48 * F[1] - 36 * F[2] + 16 * F[3] - 3 * F[4]) / (12 * h);
  const double d2 = (45 * F[0] - 154 * F[1] + 214 * F[2] - 156 * F[3] + 61 * F[4] - 10 * F[5]) / (12 * h * h);
  CHECK(std::abs(d1) < 1e-6);
  CHECK(std::abs(d2) < 1e-4);
  CHECK(euler_lagrange_residual(s) < 1e-4);
}

TEST_CASE("variational stationarity under constrained perturbations") {
  const auto& s = solution();
  const std::size_t n = s.half.size;
  const double base = product_functional(s.half, s.half_values);
  auto inner = [&](const std::vector<double>& u, const std::vector<double>& v) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = u[i] * v[i];
    return half_line_integral(s.half, g);
  };
  // Orthonormal basis for span{F, omega F, omega^2 F}; perturbations
  // orthogonal to it leave N0, N1, N2 unchanged to first order.
  std::vector<std::vector<double>> basis;
  for (int m = 0; m < 3; ++m) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = std::pow(s.half.at(i), m) * s.half_values[i];
    for (const auto& b : basis) {
      const double p = inner(v, b);
      for (std::size_t i = 0; i < n; ++i) v[i] -= p * b[i];
    }
    const double norm = std::sqrt(inner(v, v));
    for (auto& x : v) x /= norm;
    basis.push_back(v);
  }
  std::mt19937 rng(11);
  std::normal_distribution<double> coef(0.0, 1.0);
  std::uniform_real_distribution<double> width(0.5, 2.0);
  const double fnorm = std::sqrt(inner(s.half_values, s.half_values));
  for (int trial = 0; trial < 10; ++trial) {
    const double w = width(rng);
    std::vector<double> c(4);
    for (auto& x : c) x = coef(rng);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = s.half.at(i);
      d[i] = (c[0] + c[1] * x * x + c[2] * std::pow(x, 4) + c[3] * std::pow(x, 6) / 10) * std::exp(-x * x / (2 * w * w));
    }
    for (const auto& b : basis) {
      const double p = inner(d, b);
      for (std::size_t i = 0; i < n; ++i) d[i] -= p * b[i];
    }
    const double dn = std::sqrt(inner(d, d));
    std::vector<double> R(n);
    for (std::size_t i = 0; i < n; ++i) R[i] = s.half_values[i] + 1e-2 * fnorm * d[i] / dn;
    CHECK(product_functional(s.half, R) >= base - 1e-6);
  }
}

TEST_CASE("large-omega asymptotics") {
  const auto& s = solution();
  const double nu = s.mu - 0.5, k = 2 * std::sqrt(s.mu);
  auto ratio = [&](double w) {
    const auto i = static_cast<std::size_t>(std::llround(w / s.half.step));
    const double z = k * (s.half.at(i) / s.c - 1);
    return s.half_values[i] / (std::pow(z, nu) * std::exp(-z * z / 4));
  };
  const double r5 = ratio(5.0), r6 = ratio(6.0), r75 = ratio(7.5);
  CHECK(std::abs(r75 / r6 - 1) < 1e-2);
  CHECK(std::abs(r75 / r6 - 1) < std::abs(r6 / r5 - 1));
}

TEST_CASE("time signal") {
  const auto ts = extremal_time_signal(solution().spectrum);
  CHECK(ts.min_ratio < 0);
  CHECK(ts.min_ratio > -0.1);
  CHECK(ts.gaussian_min_ratio >= 0);
  CHECK(ts.sigma == doctest::Approx(std::sqrt(pi)).epsilon(1e-4));
  const std::size_t n = ts.t.size;
  for (std::size_t i = 0; i < n / 2; i += 37) CHECK(ts.f[i] == doctest::Approx(ts.f[n - 1 - i]).epsilon(1e-10));
  // Direct cosine transform oracle for the minimum.
  const auto& s = solution();
  const std::size_t imin =
      static_cast<std::size_t>(std::min_element(ts.f.begin(), ts.f.end()) - ts.f.begin());
  auto cosine = [&](double t) {
    std::vector<double> g(s.half.size);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = s.half_values[i] * std::cos(s.half.at(i) * t);
    return half_line_integral(s.half, g);
  };
  CHECK(ts.min_ratio == doctest::Approx(cosine(ts.t.at(imin)) / cosine(0.0)).epsilon(1e-5));
}

TEST_CASE("Gaussian product") {
  const auto g = gaussian_product();
  for (double p : g.product) CHECK(p == doctest::Approx(gaussian_value).epsilon(1e-8));
  CHECK(g.spread < 1e-10);
  CHECK(g.kay_silverman_rhs == doctest::Approx(0.5 * std::abs(1 - 2 / pi)).epsilon(1e-10));
  CHECK(g.kay_silverman_rhs == doctest::Approx(0.18169).epsilon(1e-4));
}

TEST_CASE("Kay-Silverman bound") {
  const UniformGrid w = UniformGrid::centered(0.01, 4001);
  const double sigma = 1.3;
  std::vector<Complex> F(w.size), G(w.size);
  for (std::size_t i = 0; i < w.size; ++i) {
    const double x = w.at(i);
    F[i] = std::exp(-x * x / (2 * sigma * sigma));
    G[i] = std::abs(x) * std::exp(-3 * x * x / 4);
  }
  const BoundReport g = kay_silverman_bound(signal_from_spectrum(w, F));
  CHECK(g.satisfied);
  CHECK(g.lhs == doctest::Approx(gaussian_value).epsilon(1e-5));
  CHECK(g.rhs == doctest::Approx(0.5 * (1 - 2 / pi)).epsilon(1e-5));

  const BoundReport z = kay_silverman_bound(signal_from_spectrum(w, G));
  CHECK(z.rhs == doctest::Approx(0.5));
  CHECK(z.satisfied);

  const auto& s = solution();
  const BoundReport e = kay_silverman_bound(s.spectrum);
  CHECK(e.lhs == doctest::Approx(s.mu).epsilon(1e-4));
  const double F0 = s.half_values[0];
  CHECK(e.rhs == doctest::Approx(std::abs(0.5 - F0 * F0 * s.c)).epsilon(1e-6));
  CHECK(e.satisfied);
}

TEST_CASE("Gislason extremal survival probability") {
  const double dE = 1.7;
  const UniformGrid t{0.0, 0.01, 4001};
  const auto Q = gislason_extremal_Q(dE, t);
  CHECK(Q.Q(0) == 1.0);
  CHECK(Q.probability(1e-9) == doctest::Approx(1.0));
  for (double x : {0.05, 0.4, 1.3, 7.0}) {
    const double z = std::sqrt(5.0) * x * dE;
    const double oracle = 9 * std::pow(std::sin(z) - z * std::cos(z), 2) / std::pow(z, 6);
    CHECK(Q.probability(x) == doctest::Approx(oracle).epsilon(1e-10));
  }
  const double tau0 = fleming_tau0(Q);
  CHECK(tau0 * dE == doctest::Approx(3 * pi / (5 * std::sqrt(5.0))).epsilon(1e-8));
  CHECK(3 * pi * 0.9 / (5 * tau0) == doctest::Approx(std::sqrt(5.0) * 0.9 * dE).epsilon(1e-8));
}

TEST_CASE("ordering chain") {
  const auto chain = ordering_chain();
  REQUIRE(chain.size() == 4);
  CHECK(chain[1].value == doctest::Approx(solve_mu()));
  CHECK(chain[2].value == doctest::Approx(gaussian_value).epsilon(1e-9));
  CHECK(chain[3].value == doctest::Approx(std::sqrt(128.0 / 315 * 225 / 256 - 8.0 / 27 * 3375 / 4096)).epsilon(1e-9));
  for (std::size_t i = 1; i < chain.size(); ++i) CHECK(chain[i].value - chain[i - 1].value > 1e-3);
}

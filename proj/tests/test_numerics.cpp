#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "etu/error.hpp"
#include "etu/parabolic_cylinder.hpp"
#include "etu/quadrature.hpp"
#include "etu/roots.hpp"

using namespace etu;
using std::numbers::pi;

namespace {
const double inf = std::numeric_limits<double>::infinity();

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an etu::Error");
  return Errc::domain_error;
}
}  // namespace

TEST_CASE("quadrature of closed-form integrals") {
  CHECK(integrate([](double t) { return std::exp(-t); }, 0.0, inf) == doctest::Approx(1.0).epsilon(1e-10));
  const double c = std::sqrt(45.0) / 20.0;
  CHECK(integrate([&](double E) { return c * (1.0 - E * E / 5.0); }, 0.0, std::sqrt(5.0)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -inf, inf) == doctest::Approx(std::sqrt(pi)).epsilon(1e-10));
  CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -inf, inf) == doctest::Approx(pi).epsilon(1e-9));
}

TEST_CASE("oscillatory power-law tail of the extremal survival probability") {
  // Q*(t) = 9 (sin z - z cos z)^2 / z^6, z = sqrt5 t; its integral is 3 pi/(5 sqrt5).
  auto q = [](double t) {
    const double z = std::sqrt(5.0) * t;
    if (z < 1e-3) return 1.0 - z * z / 5.0;
    const double g = 3.0 * (std::sin(z) - z * std::cos(z)) / (z * z * z);
    return g * g;
  };
  const double exact = 3.0 * pi / (5.0 * std::sqrt(5.0));
  CHECK(integrate_periodic_tail(q, 0.0, pi / std::sqrt(5.0), 3.0) == doctest::Approx(exact).epsilon(1e-9));
  // sinc^2 has a slower 1/t^2 tail: int_0^inf sin^2 x / x^2 = pi/2
  auto s2 = [](double x) { return x < 1e-6 ? 1.0 : std::pow(std::sin(x) / x, 2); };
  CHECK(integrate_periodic_tail(s2, 0.0, pi, 1.0) == doctest::Approx(pi / 2).epsilon(1e-9));
}

TEST_CASE("quadrature errors") {
  CHECK(code_of([] { integrate([](double x) { return x; }, 1.0, 1.0); }) == Errc::domain_error);
  CHECK(code_of([] { integrate([](double x) { return x; }, 2.0, 1.0); }) == Errc::domain_error);
  QuadratureSpec tiny;
  tiny.max_subdivisions = 8;
  CHECK(code_of([&] { integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, tiny); }) ==
        Errc::non_convergence);
  QuadratureSpec bad;
  bad.abs_tol = 0.0;
  CHECK(code_of([&] { bad.validate(); }) == Errc::domain_error);
}

TEST_CASE("quadrature is linear") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double a1 = u(rng), a2 = u(rng), b1 = u(rng), b2 = u(rng);
    const double alpha = u(rng), beta = u(rng);
    auto f = [=](double x) { return std::exp(-x * x) * std::cos(a1 * x + b1); };
    auto g = [=](double x) { return 1.0 / (1.0 + (x - a2) * (x - a2)) + b2 * std::exp(-std::abs(x)); };
    const double lhs = integrate([&](double x) { return alpha * f(x) + beta * g(x); }, -3.0, 4.0);
    const double rhs = alpha * integrate(f, -3.0, 4.0) + beta * integrate(g, -3.0, 4.0);
    CHECK(std::abs(lhs - rhs) <= 2.0 * 1e-10 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("bracketing root finder") {
  CHECK(find_root([](double x) { return x * x - 2.0; }, {1.0, 2.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(find_root([](double x) { return std::cos(x); }, {1.0, 2.0}) == doctest::Approx(pi / 2).epsilon(1e-12));
  CHECK(code_of([] { find_root([](double x) { return x * x + 1.0; }, {-1.0, 1.0}); }) == Errc::no_sign_change);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double r = u(rng);
    const double lo = r - 1.0 - std::abs(u(rng)), hi = r + 0.1 + std::abs(u(rng));
    const double x = find_root([&](double v) { return std::tanh(v - r); }, {lo, hi});
    CHECK(x >= lo);
    CHECK(x <= hi);
    CHECK(x == doctest::Approx(r).epsilon(1e-9));
  }
}

TEST_CASE("minimiser") {
  const Minimum m = minimize([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, -1.0, 2.0);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-7));
  CHECK(m.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parabolic cylinder function at the origin") {
  // Independent oracle: the unsubstituted representation at tighter
  // tolerance, with the t^(-1/2) singularity split off analytically on [0, eps].
  const double nu = -0.5;
  auto raw = [&](double t) { return std::exp(-0.5 * t * t) * std::pow(t, -nu - 1.0); };
  const double eps = 1e-6;
  const double head = 2.0 * std::sqrt(eps) * (1.0 - eps * eps / 10.0);
  QuadratureSpec tight;
  tight.abs_tol = tight.rel_tol = 1e-12;
  const double oracle = (head + integrate(raw, eps, 1.0, tight) + integrate(raw, 1.0, inf, tight)) / std::tgamma(0.5);
  const double d = parabolic_cylinder_d(nu, 0.0);
  CHECK(d == doctest::Approx(oracle).epsilon(1e-9));
  // closed form 2^(nu/2) sqrt(pi) / Gamma((1 - nu)/2)
  CHECK(d == doctest::Approx(std::pow(2.0, nu / 2) * std::sqrt(pi) / std::tgamma(0.75)).epsilon(1e-10));
  CHECK(d == doctest::Approx(1.2162802).epsilon(1e-7));
}

TEST_CASE("parabolic cylinder function large-z asymptotics") {
  const double ratio = parabolic_cylinder_d(-0.2, 10.0) / (std::pow(10.0, -0.2) * std::exp(-25.0));
  CHECK(std::abs(ratio - 1.0) < 0.02);
}

TEST_CASE("parabolic cylinder function satisfies the Weber equation") {
  for (double nu : {-0.205, -0.5, -0.8}) {
    for (double z : {-2.0, -1.0, 0.0, 0.7, 2.5, 4.0}) {
      const double h = 1e-3;
      const double d0 = parabolic_cylinder_d(nu, z);
      const double d2 = (parabolic_cylinder_d(nu, z + h) - 2.0 * d0 + parabolic_cylinder_d(nu, z - h)) / (h * h);
      const double residual = d2 + (nu + 0.5 - z * z / 4.0) * d0;
      CHECK(std::abs(residual) < 1e-4 * std::abs(d0));
    }
  }
}

TEST_CASE("parabolic cylinder function derivative and resolution") {
  QuadratureSpec fine;
  fine.abs_tol = fine.rel_tol = 5e-11;
  for (double z : {-1.5, 0.3, 3.0}) {
    const double nu = -0.3;
    const double h = 1e-5;
    const double fd = (parabolic_cylinder_d(nu, z + h) - parabolic_cylinder_d(nu, z - h)) / (2.0 * h);
    CHECK(parabolic_cylinder_d_derivative(nu, z) == doctest::Approx(fd).epsilon(1e-6));
    const double coarse = parabolic_cylinder_d(nu, z);
    CHECK(std::abs(parabolic_cylinder_d(nu, z, fine) - coarse) <= 1e-10 * std::abs(coarse));
  }
  // stationary point of the extremal spectrum at omega = 0
  const double mu = 0.29505306;
  CHECK(std::abs(parabolic_cylinder_d_derivative(mu - 0.5, -2.0 * std::sqrt(mu))) < 1e-7);
}

TEST_CASE("parabolic cylinder function domain") {
  CHECK(code_of([] { parabolic_cylinder_d(0.1, 1.0); }) == Errc::domain_error);
  CHECK(code_of([] { parabolic_cylinder_d(-1.0, 1.0); }) == Errc::domain_error);
  CHECK(code_of([] { parabolic_cylinder_d(-0.5, inf); }) == Errc::domain_error);
}

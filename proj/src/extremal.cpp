#include "etu/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "etu/energy_distribution.hpp"
#include "etu/error.hpp"
#include "etu/kernels.hpp"
#include "etu/parabolic_cylinder.hpp"
#include "etu/roots.hpp"

namespace etu {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

// Derivatives on a half grid starting at zero, using F(-omega) = F(omega)
// for the nodes left of the origin.
std::vector<double> first_derivative(double h, std::span<const double> F) {
  const std::size_t n = F.size();
  auto f = [&](long j) { return F[static_cast<std::size_t>(std::abs(j))]; };
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto k = static_cast<long>(i);
    if (i + 2 < n) {
      d[i] = (f(k - 2) - 8 * f(k - 1) + 8 * f(k + 1) - f(k + 2)) / (12 * h);
    } else {
      d[i] = (25 * f(k) - 48 * f(k - 1) + 36 * f(k - 2) - 16 * f(k - 3) + 3 * f(k - 4)) / (12 * h);
    }
  }
  return d;
}

std::vector<double> second_derivative(double h, std::span<const double> F) {
  const std::size_t n = F.size();
  auto f = [&](long j) { return F[static_cast<std::size_t>(std::abs(j))]; };
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const auto k = static_cast<long>(i);
    d[i] = (-f(k - 2) + 16 * f(k - 1) - 30 * f(k) + 16 * f(k + 1) - f(k + 2)) / (12 * h * h);
  }
  return d;
}

struct HalfMoments {
  double N0, N1, N2, A;
};

HalfMoments half_moments(const UniformGrid& half, std::span<const double> F) {
  const std::size_t n = F.size();
  const auto dF = first_derivative(half.step, F);
  std::vector<double> g0(n), g1(n), g2(n), ga(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = half.at(i);
    g0[i] = F[i] * F[i];
    g1[i] = w * g0[i];
    g2[i] = w * w * g0[i];
    ga[i] = dF[i] * dF[i];
  }
  return {2 * half_line_integral(half, g0), 2 * half_line_integral(half, g1), 2 * half_line_integral(half, g2),
          2 * half_line_integral(half, ga)};
}

// Delta t Delta omega+ of an even real spectrum supported on [-end, end].
double even_product(const RealFunction& F, const RealFunction& dF, double end) {
  auto moment = [&](int m) { return 2 * integrate([&](double w) { return std::pow(w, m) * F(w) * F(w); }, 0.0, end); };
  const double N0 = moment(0), N1 = moment(1), N2 = moment(2);
  const double A = 2 * integrate([&](double w) { return dF(w) * dF(w); }, 0.0, end);
  return std::sqrt(A * N2 / (N0 * N0) - A * N1 * N1 / (N0 * N0 * N0));
}

std::size_t origin_node(const UniformGrid& g) { return static_cast<std::size_t>(std::llround(-g.start / g.step)); }

}  // namespace

double mu_equation(double rho) {
  const double e = 0.5 - rho * rho;
  if (!(rho > 0.0 && e > 0.0)) raise(Errc::domain_error, "rho must lie in (0, 1/sqrt2)");
  // t = s^(1/e) absorbs the t^(e-1) endpoint singularity exactly.
  const double s_max = std::pow(2 * rho + 40.0, e);
  return integrate(
      [&](double s) {
        const double t = std::pow(s, 1.0 / e);
        return std::exp(2 * rho * t - 0.5 * t * t) * (t - rho) / e;
      },
      0.0, s_max, QuadratureSpec{}.tightened(1e-3));
}

double solve_mu() {
  static const double mu = [] {
    const double rho = find_root(mu_equation, {0.5, 0.6, 1e-14});
    return rho * rho;
  }();
  return mu;
}

double mu_cross_check(double mu, double h) {
  if (!(mu > 0.0 && mu < 0.5)) raise(Errc::domain_error, "mu must lie in (0, 1/2)");
  const double z = -2 * std::sqrt(mu);
  return (parabolic_cylinder_d(mu - 0.5, z + h) - parabolic_cylinder_d(mu - 0.5, z - h)) / (2 * h);
}

double schwartz_lower_bound() { return 1.0 / std::sqrt(12.0); }

SignalPair extremal_spectrum(double mu, double c, std::size_t half_points, double extent) {
  if (!(mu > 0.0 && mu < 0.5)) raise(Errc::domain_error, "mu must lie in (0, 1/2)");
  if (!(c > 0.0) || !std::isfinite(c)) raise(Errc::domain_error, "c must be positive and finite");
  if (half_points < 16 || !(extent > 1.0)) raise(Errc::domain_error, "need at least 16 nodes beyond omega = c");
  const UniformGrid half{0.0, extent * c / static_cast<double>(half_points - 1), half_points};
  const auto nodes = half.nodes();
  std::vector<double> values(half_points);
  const double nu = mu - 0.5, k = 2 * std::sqrt(mu);
  // Tight tolerance: the residual check differentiates these samples twice.
  const QuadratureSpec spec = QuadratureSpec{}.tightened(1e-3);
  kernels::tabulate([&](double w) { return parabolic_cylinder_d(nu, k * (w / c - 1.0), spec); }, nodes, values);

  const UniformGrid omega = UniformGrid::centered(half.step, 2 * half_points - 1);
  std::vector<Complex> F(omega.size);
  for (std::size_t j = 0; j < half_points; ++j) {
    F[half_points - 1 + j] = values[j];
    F[half_points - 1 - j] = values[j];
  }
  return normalized(signal_from_spectrum(omega, F));
}

ExtremalSolution extremal_solution(double c, std::size_t half_points, double extent) {
  ExtremalSolution s;
  s.mu = solve_mu();
  s.spectrum = extremal_spectrum(s.mu, c, half_points, extent);
  const std::size_t k0 = origin_node(s.spectrum.omega);
  s.half = UniformGrid{0.0, s.spectrum.omega.step, s.spectrum.omega.size - k0};
  s.half_values.resize(s.half.size);
  for (std::size_t j = 0; j < s.half.size; ++j) s.half_values[j] = s.spectrum.F[k0 + j].real();
  const HalfMoments m = half_moments(s.half, s.half_values);
  s.c = m.N1 / m.N0;
  s.b = m.N2 / m.N0;
  s.a = m.A / m.N0;
  return s;
}

double product_functional(const UniformGrid& half, std::span<const double> F) {
  if (F.size() != half.size || half.size < 8) raise(Errc::domain_error, "need at least 8 samples matching the grid");
  if (std::abs(half.start) > 1e-12 * half.step) raise(Errc::domain_error, "half grid must start at omega = 0");
  const HalfMoments m = half_moments(half, F);
  return m.A * m.N2 / (m.N0 * m.N0) - m.A * m.N1 * m.N1 / (m.N0 * m.N0 * m.N0);
}

double euler_lagrange_residual(const ExtremalSolution& s) {
  const auto d2 = second_derivative(s.half.step, s.half_values);
  double worst = 0.0, scale = 0.0;
  // The even extension has a jump in the third derivative at zero, so
  // start past the stencils that reach across the origin.
  for (std::size_t i = 2; i + 2 < s.half.size; ++i) {
    const double w = s.half.at(i);
    const double pot = s.a * (w * w - 2 * s.c * w + 3 * s.c * s.c - 2 * s.b) * s.half_values[i];
    worst = std::max(worst, std::abs((s.b - s.c * s.c) * d2[i] - pot));
    scale = std::max(scale, std::abs(pot));
  }
  return worst / scale;
}

ExtremalTimeSignal extremal_time_signal(const SignalPair& spectrum) {
  const SpreadMoments pm = positive_frequency_moments(spectrum);
  const std::size_t k0 = origin_node(spectrum.t);
  ExtremalTimeSignal out;
  out.t = spectrum.t;
  out.sigma = std::sqrt(pi) * pm.mean;
  const double f0 = spectrum.f[k0];
  if (!(std::abs(f0) > 0.0)) raise(Errc::domain_error, "f(0) vanishes");
  out.f.resize(out.t.size);
  out.gaussian.resize(out.t.size);
  out.min_ratio = inf;
  out.gaussian_min_ratio = inf;
  for (std::size_t i = 0; i < out.t.size; ++i) {
    const double t = out.t.at(i);
    out.f[i] = spectrum.f[i] / f0;
    out.gaussian[i] = std::exp(-0.5 * out.sigma * out.sigma * t * t);
    out.min_ratio = std::min(out.min_ratio, out.f[i]);
    out.gaussian_min_ratio = std::min(out.gaussian_min_ratio, out.gaussian[i]);
  }
  return out;
}

GaussianProduct gaussian_product(std::vector<double> sigmas) {
  if (sigmas.empty()) raise(Errc::domain_error, "need at least one width");
  GaussianProduct g;
  g.sigma = std::move(sigmas);
  double lo = inf, hi = -inf, sum = 0.0;
  for (double s : g.sigma) {
    if (!(s > 0.0)) raise(Errc::domain_error, "widths must be positive");
    auto f2 = [s](double t) { return std::sqrt(s * s / pi) * std::exp(-s * s * t * t); };
    auto F2 = [s](double w) { return std::exp(-w * w / (s * s)) / std::sqrt(pi * s * s); };
    const double dt2 = integrate([&](double t) { return t * t * f2(t); }, -inf, inf);
    const double wbar = 2 * integrate([&](double w) { return w * F2(w); }, 0.0, inf);
    const double dw2 = 2 * integrate([&](double w) { return (w - wbar) * (w - wbar) * F2(w); }, 0.0, inf);
    const double p = std::sqrt(dt2 * dw2);
    g.product.push_back(p);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
    sum += p;
    if (g.product.size() == 1) g.kay_silverman_rhs = std::abs(0.5 - F2(0.0) * wbar);
  }
  g.value = sum / static_cast<double>(g.product.size());
  g.spread = hi - lo;
  return g;
}

BoundReport kay_silverman_bound(const SignalPair& s) {
  const SignalPair n = normalized(s);
  const SpreadMoments tm = time_moments(n);
  const SpreadMoments pm = positive_frequency_moments(n);
  const double F0 = std::norm(n.F[origin_node(n.omega)]);
  return make_bound("KaySilverman", "signal", tm.spread * pm.spread, Relation::geq, std::abs(0.5 - F0 * pm.mean),
                    "Kay-Silverman Delta omega+ Delta t >= |1/2 - |F(0)|^2 omega-bar+|", 1e-9);
}

SurvivalAmplitude gislason_extremal_Q(double deltaE, const UniformGrid& t, double hbar) {
  return SurvivalAmplitude(EnergyDistribution(TruncatedParabola{deltaE, 0.0}, hbar), t);
}

std::vector<ProductEntry> ordering_chain() {
  auto gauss = [](double w) { return std::exp(-0.5 * w * w); };
  auto dgauss = [](double w) { return -w * std::exp(-0.5 * w * w); };
  auto parabola = [](double w) { return 1 - w * w; };
  auto dparabola = [](double w) { return -2 * w; };
  return {
      {"schwartz-bound", schwartz_lower_bound()},
      {"extremal", solve_mu()},
      {"gaussian", even_product(gauss, dgauss, inf)},
      {"truncated-parabola", even_product(parabola, dparabola, 1.0)},
  };
}

}  // namespace etu

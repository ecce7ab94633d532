#include "etu/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "etu/error.hpp"
#include "etu/kernels.hpp"

namespace etu {

namespace {

const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

void check_grid(const UniformGrid& g, std::size_t n, const char* what) {
  if (g.size < 2 || !(g.step > 0.0) || !std::isfinite(g.step) || !std::isfinite(g.start))
    raise(Errc::domain_error, std::string(what) + " grid is invalid");
  if (n != g.size) raise(Errc::domain_error, std::string(what) + " samples do not match the grid");
}

std::size_t origin_index(const UniformGrid& g) {
  const std::size_t i = g.index_of(0.0);
  if (i == g.size) raise(Errc::domain_error, "the grid must contain the origin as a node");
  return i;
}

template <class T>
double mass(const UniformGrid& g, std::span<const T> v) {
  double s = 0.0;
  for (const T& x : v) s += std::norm(x);
  return s * g.step;
}

template <class T>
SpreadMoments spread(const UniformGrid& g, std::span<const T> v) {
  double m0 = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double w = std::norm(v[i]);
    m0 += w;
    m1 += w * g.at(i);
  }
  if (!(m0 > 0.0)) raise(Errc::domain_error, "signal has zero norm");
  const double mean = m1 / m0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double d = g.at(i) - mean;
    m2 += std::norm(v[i]) * d * d;
  }
  return {mean, std::sqrt(m2 / m0)};
}

}  // namespace

void SignalPair::check_normalized(double tol) const {
  check_grid(t, f.size(), "time");
  check_grid(omega, F.size(), "frequency");
  const double nf = mass<double>(t, f);
  const double nF = mass<Complex>(omega, F);
  if (std::abs(nf - 1.0) > tol || std::abs(nF - 1.0) > tol)
    raise(Errc::domain_error, "signal pair is not normalised (" + std::to_string(nf) + ", " + std::to_string(nF) + ")");
}

UniformGrid frequency_grid_for(const UniformGrid& t) {
  return UniformGrid::centered(2.0 * std::numbers::pi / (static_cast<double>(t.size) * t.step), t.size);
}

UniformGrid time_grid_for(const UniformGrid& omega) {
  return UniformGrid::centered(2.0 * std::numbers::pi / (static_cast<double>(omega.size) * omega.step), omega.size);
}

std::vector<Complex> forward_transform(const UniformGrid& t, std::span<const Complex> f, const UniformGrid& omega) {
  check_grid(t, f.size(), "time");
  std::vector<Complex> F(omega.size);
  kernels::fourier_sum(t, f, omega, -1.0, kernels::EndWeights::none, F);
  for (Complex& c : F) c *= t.step * inv_sqrt_2pi;
  return F;
}

std::vector<Complex> inverse_transform(const UniformGrid& omega, std::span<const Complex> F, const UniformGrid& t) {
  check_grid(omega, F.size(), "frequency");
  std::vector<Complex> f(t.size);
  kernels::fourier_sum(omega, F, t, 1.0, kernels::EndWeights::none, f);
  for (Complex& c : f) c *= omega.step * inv_sqrt_2pi;
  return f;
}

SignalPair signal_from_spectrum(const UniformGrid& omega, std::span<const Complex> F) {
  check_grid(omega, F.size(), "frequency");
  if (std::abs(omega.start + omega.back()) > 1e-9 * omega.step)
    raise(Errc::domain_error, "spectrum grid must be symmetric about omega = 0");
  const UniformGrid t = time_grid_for(omega);
  const std::vector<Complex> fc = inverse_transform(omega, F, t);
  double peak = 0.0, imag = 0.0;
  for (const Complex& c : fc) {
    peak = std::max(peak, std::abs(c));
    imag = std::max(imag, std::abs(c.imag()));
  }
  if (imag > 1e-8 * std::max(peak, 1.0)) raise(Errc::domain_error, "spectrum is not Hermitian; the signal is not real");
  SignalPair s{t, std::vector<double>(fc.size()), omega, std::vector<Complex>(F.begin(), F.end())};
  std::transform(fc.begin(), fc.end(), s.f.begin(), [](Complex c) { return c.real(); });
  return s;
}

SignalPair spectrum_from_signal(const UniformGrid& t, std::span<const double> f) {
  check_grid(t, f.size(), "time");
  const UniformGrid omega = frequency_grid_for(t);
  const std::vector<Complex> fc(f.begin(), f.end());
  return {t, std::vector<double>(f.begin(), f.end()), omega, forward_transform(t, fc, omega)};
}

SignalPair normalized(SignalPair s) {
  const double nf = mass<double>(s.t, s.f);
  if (!(nf > 0.0)) raise(Errc::domain_error, "signal has zero norm");
  const double k = 1.0 / std::sqrt(nf);
  for (double& v : s.f) v *= k;
  for (Complex& v : s.F) v *= k;
  return s;
}

SpreadMoments time_moments(const UniformGrid& t, std::span<const double> f) { return spread<double>(t, f); }
SpreadMoments time_moments(const UniformGrid& t, std::span<const Complex> f) { return spread<Complex>(t, f); }
SpreadMoments time_moments(const SignalPair& s) { return spread<double>(s.t, s.f); }
SpreadMoments frequency_moments(const SignalPair& s) { return spread<Complex>(s.omega, s.F); }

double half_line_integral(const UniformGrid& omega, std::span<const double> g) {
  const std::size_t k0 = origin_index(omega);
  const std::size_t panels = omega.size - 1 - k0;
  if (panels == 0) return 0.0;
  const double h = omega.step;
  if (panels == 1) return 0.5 * h * (g[k0] + g[k0 + 1]);
  const std::size_t simpson_panels = panels % 2 == 0 ? panels : panels - 3;
  double s = 0.0;
  for (std::size_t p = 0; p < simpson_panels; p += 2) {
    const std::size_t i = k0 + p;
    s += h / 3.0 * (g[i] + 4.0 * g[i + 1] + g[i + 2]);
  }
  if (simpson_panels != panels) {
    const std::size_t i = k0 + simpson_panels;
    s += 3.0 * h / 8.0 * (g[i] + 3.0 * g[i + 1] + 3.0 * g[i + 2] + g[i + 3]);
  }
  return s;
}

SpreadMoments positive_frequency_moments(const SignalPair& s) {
  check_grid(s.omega, s.F.size(), "frequency");
  std::vector<double> p0(s.F.size()), p1(s.F.size()), p2(s.F.size());
  for (std::size_t k = 0; k < s.F.size(); ++k) {
    const double w = s.omega.at(k);
    p0[k] = std::norm(s.F[k]);
    p1[k] = w * p0[k];
  }
  const double n0 = half_line_integral(s.omega, p0);
  if (!(n0 > 0.0)) raise(Errc::domain_error, "spectrum has no weight at positive frequencies");
  const double mean = half_line_integral(s.omega, p1) / n0;
  for (std::size_t k = 0; k < s.F.size(); ++k) {
    const double d = s.omega.at(k) - mean;
    p2[k] = d * d * p0[k];
  }
  return {mean, std::sqrt(std::max(0.0, half_line_integral(s.omega, p2) / n0))};
}

AnalyticSignal analytic_signal(const SignalPair& s) {
  check_grid(s.omega, s.F.size(), "frequency");
  const std::size_t k0 = origin_index(s.omega);
  AnalyticSignal a{s.t, {}, s.omega, std::vector<Complex>(s.F.size(), 0.0), false};
  double peak = 0.0;
  for (std::size_t k = 0; k < s.F.size(); ++k) {
    peak = std::max(peak, std::abs(s.F[k]));
    if (k > k0) a.F[k] = std::sqrt(2.0) * s.F[k];
  }
  a.F[k0] = s.F[k0] / std::sqrt(2.0);
  a.zero_dc = std::abs(s.F[k0]) <= 1e-6 * peak;
  a.f = inverse_transform(s.omega, a.F, s.t);
  return a;
}

namespace {

template <class T>
T width_on_grid(const UniformGrid& x, std::span<const T> phi) {
  check_grid(x, phi.size(), "abscissa");
  const std::size_t i0 = origin_index(x);
  if (std::abs(phi[i0]) == 0.0) raise(Errc::zero_at_origin, "equivalent width needs phi(0) != 0");
  T s = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) s += (i == 0 || i + 1 == phi.size() ? 0.5 : 1.0) * phi[i];
  return s * x.step / phi[i0];
}

}  // namespace

double equivalent_width(const UniformGrid& x, std::span<const double> phi) { return width_on_grid<double>(x, phi); }
Complex equivalent_width(const UniformGrid& x, std::span<const Complex> phi) { return width_on_grid<Complex>(x, phi); }

double equivalent_width(const RealFunction& phi, double lo, double hi, const QuadratureSpec& spec) {
  const double p0 = phi(0.0);
  if (p0 == 0.0) raise(Errc::zero_at_origin, "equivalent width needs phi(0) != 0");
  double total = 0.0;
  // split at the origin so that a peak there is a panel edge
  if (lo < 0.0) total += integrate(phi, lo, std::min(hi, 0.0), spec);
  if (hi > 0.0) total += integrate(phi, std::max(lo, 0.0), hi, spec);
  return total / p0;
}

}  // namespace etu

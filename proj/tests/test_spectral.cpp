#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "etu/energy_distribution.hpp"
#include "etu/error.hpp"
#include "etu/signal.hpp"
#include "etu/survival.hpp"

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

std::vector<EnergyDistribution> analytic_forms() {
  return {
      EnergyDistribution(Lorentzian{0.3, 1.7}),
      EnergyDistribution(GaussianSpec{-0.4, 1.3}),
      EnergyDistribution(TruncatedParabola{0.8, 0.2}),
      EnergyDistribution(Stepwise{1.1, -0.5}),
      EnergyDistribution(Bhattacharyya{0.9, 0.25}),
      EnergyDistribution(TwoPoint{0.0, 2.0, 0.5}),
      EnergyDistribution(TwoPoint{-1.0, 0.5, 0.3}),
  };
}

// chi(t) by direct quadrature of the density, independent of the closed forms.
Complex amplitude_oracle(const EnergyDistribution& P, double t) {
  auto re = [&](double E) { return P.density(E) * std::cos(E * t / P.hbar()); };
  auto im = [&](double E) { return -P.density(E) * std::sin(E * t / P.hbar()); };
  auto [lo, hi] = P.support();
  QuadratureSpec spec;
  spec.abs_tol = spec.rel_tol = 1e-11;
  if (const auto* b = std::get_if<Bhattacharyya>(&P.form())) {
    // remove the inverse-square-root edge with e = E - onset = s^2 and write
    // the density in e directly
    const double theta = std::sqrt(2.0) * b->deltaE;
    auto w = [=](double s) { return 2.0 * std::exp(-s * s / theta) / std::sqrt(pi * theta); };
    auto ph = [=](double s) { return (b->onset + s * s) * t / P.hbar(); };
    return {integrate([&](double s) { return w(s) * std::cos(ph(s)); }, 0.0, inf, spec),
            integrate([&](double s) { return -w(s) * std::sin(ph(s)); }, 0.0, inf, spec)};
  }
  if (!std::isfinite(lo)) {
    const double c = P.peak_location();
    return {integrate(re, -inf, c, spec) + integrate(re, c, inf, spec),
            integrate(im, -inf, c, spec) + integrate(im, c, inf, spec)};
  }
  return {integrate(re, lo, hi, spec), integrate(im, lo, hi, spec)};
}

UniformGrid odd_grid(double step, std::size_t n) { return UniformGrid::centered(step, n); }

}  // namespace

TEST_CASE("moments of the analytic forms") {
  const Moments g = EnergyDistribution(GaussianSpec{0.0, 1.0}).moments();
  CHECK(g.mean == 0.0);
  CHECK(g.variance == 1.0);
  CHECK(g.finite);
  const Moments l = EnergyDistribution(Lorentzian{0.7, 2.0}).moments();
  CHECK(l.mean == 0.7);
  CHECK(std::isinf(l.variance));
  CHECK_FALSE(l.finite);
  const Moments p = EnergyDistribution(TruncatedParabola{1.0}).moments();
  CHECK(p.mean == 0.0);
  CHECK(p.variance == doctest::Approx(1.0));
  CHECK(p.finite);
}

TEST_CASE("analytic moments agree with quadrature of the density") {
  for (const auto& P : analytic_forms()) {
    CAPTURE(P.kind());
    const Moments m = P.moments();
    CHECK(P.expectation([](double) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-9));
    if (!m.finite) continue;
    CHECK(P.expectation([](double E) { return E; }) == doctest::Approx(m.mean).epsilon(1e-9));
    CHECK(*P.central_moment(2) == doctest::Approx(m.variance).epsilon(1e-9));
    // the Bhattacharyya edge E - onset loses digits once onset != 0
    if (!P.has_point_masses() && P.kind() != "bhattacharyya") {
      CHECK(P.integrate_over_support([&](double E) { return P.density(E); }) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(P.integrate_over_support([&](double E) { return E * P.density(E); }) ==
            doctest::Approx(m.mean).epsilon(1e-8));
    }
  }
}

TEST_CASE("cdf and quantile are consistent") {
  for (const auto& P : analytic_forms()) {
    if (P.has_point_masses()) continue;
    CAPTURE(P.kind());
    for (double prob : {0.05, 0.3, 0.5, 0.77, 0.95}) {
      const double E = P.quantile(prob);
      CHECK(P.cdf(E) == doctest::Approx(prob).epsilon(1e-10));
    }
    const double a = P.quantile(0.2);
    const double b = P.quantile(0.6);
    const double mass = integrate([&](double E) { return P.density(E); }, a, b);
    CHECK(mass == doctest::Approx(P.cdf(b) - P.cdf(a)).epsilon(1e-9));
  }
}

TEST_CASE("closed-form amplitudes match direct quadrature") {
  for (const auto& P : analytic_forms()) {
    // the Lorentzian's undamped oscillating 1/E^2 tail defeats the oracle; its
    // amplitude is checked against the exponential law instead
    if (P.has_point_masses() || P.kind() == "lorentzian") continue;
    CAPTURE(P.kind());
    for (double t : {0.0, 0.01, 0.4, 1.3, 4.0, 11.0}) {
      CAPTURE(t);
      const Complex exact = P.amplitude(t);
      const Complex oracle = amplitude_oracle(P, t);
      CHECK(std::abs(exact - oracle) < 1e-8);
    }
  }
}

TEST_CASE("survival amplitude examples") {
  const double gamma = 1.7;
  const auto lor = survival_amplitude(EnergyDistribution(Lorentzian{0.0, gamma}), 10.0, 201);
  for (std::size_t i = 0; i < lor.size(); i += 20)
    CHECK(lor.Q(i) == doctest::Approx(std::exp(-gamma * lor.times().at(i))).epsilon(1e-13));
  const double dE = 0.8;
  const auto gau = survival_amplitude(EnergyDistribution(GaussianSpec{0.0, dE}), 5.0, 101);
  for (std::size_t i = 0; i < gau.size(); i += 10) {
    const double x = gau.times().at(i) * dE;
    CHECK(gau.Q(i) == doctest::Approx(std::exp(-x * x)).epsilon(1e-13));
  }
  const auto stp = survival_amplitude(EnergyDistribution(Stepwise{dE}), 30.0, 301);
  for (std::size_t i = 1; i < stp.size(); i += 17) {
    const double z = std::sqrt(3.0) * stp.times().at(i) * dE;
    CHECK(stp.Q(i) == doctest::Approx(std::pow(std::sin(z) / z, 2)).epsilon(1e-12));
  }
}

TEST_CASE("amplitudes respect |chi| <= 1 and the hbar scale") {
  for (const auto& P : analytic_forms()) {
    CAPTURE(P.kind());
    const auto chi = survival_amplitude(P);
    for (const Complex& c : chi.values()) CHECK(std::abs(c) <= 1.0 + 1e-12);
    const EnergyDistribution P2(P.form(), 2.5);
    for (double t : {0.3, 2.0, 7.0}) CHECK(std::abs(P2.amplitude(2.5 * t) - P.amplitude(t)) < 1e-14);
  }
}

TEST_CASE("sampled distributions") {
  const double dE = 0.7;
  const UniformGrid g = UniformGrid::from_range(-12 * dE, 12 * dE, 4001);
  std::vector<double> v(g.size);
  const EnergyDistribution exact(GaussianSpec{0.0, dE});
  for (std::size_t i = 0; i < g.size; ++i) v[i] = exact.density(g.at(i));
  const auto P = EnergyDistribution::normalized_sampled(g, v);
  const Moments m = P.moments();
  CHECK(m.finite);
  CHECK(m.variance == doctest::Approx(dE * dE).epsilon(1e-8));
  CHECK(*P.peak() == doctest::Approx(*exact.peak()).epsilon(1e-12));
  const auto chi = survival_amplitude(P, 20.0, 257);
  for (std::size_t i = 0; i < chi.size(); i += 8) CHECK(std::abs(chi.values()[i] - exact.amplitude(chi.times().at(i))) < 1e-10);

  // a Lorentzian sampled on a wide grid keeps growing in its second moment
  const UniformGrid wide = UniformGrid::from_range(-400.0, 400.0, 80001);
  const EnergyDistribution lor(Lorentzian{0.0, 1.0});
  for (std::size_t i = 0; i < wide.size; ++i) v.resize(wide.size), v[i] = lor.density(wide.at(i));
  CHECK_FALSE(EnergyDistribution::normalized_sampled(wide, v).moments().finite);

  std::vector<double> neg(g.size, 0.1);
  neg[5] = -1.0;
  CHECK(code_of([&] { EnergyDistribution(Sampled{g, neg}); }) == Errc::domain_error);
  std::vector<double> unnormalised(g.size, 1.0);
  CHECK(code_of([&] { EnergyDistribution(Sampled{g, unnormalised}); }) == Errc::domain_error);
}

TEST_CASE("peaks of sampled densities are refined by parabolic interpolation") {
  const UniformGrid g = UniformGrid::from_range(-5.0, 5.0, 101);
  std::vector<double> v(g.size);
  for (std::size_t i = 0; i < g.size; ++i) v[i] = std::max(0.0, 1.0 - (g.at(i) - 0.037) * (g.at(i) - 0.037) / 4.0);
  const auto P = EnergyDistribution::normalized_sampled(g, v);
  const double scale = 1.0 / std::get<Sampled>(P.form()).values[50] * v[50];
  CHECK(P.peak_location() == doctest::Approx(0.037).epsilon(1e-12));
  CHECK(*P.peak() * scale == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("Luo inequality") {
  const auto expo = survival_amplitude(EnergyDistribution(Lorentzian{0.0, 1.0}));
  CHECK(luo_check(expo).front().satisfied);
  const auto gau = survival_amplitude(EnergyDistribution(GaussianSpec{0.0, 1.0}));
  CHECK(luo_check(gau).front().satisfied);

  // instantaneous decay: Q = 1 up to t* and 0 afterwards
  const UniformGrid t = UniformGrid::from_range(0.0, 4.0, 401);
  std::vector<Complex> chi(t.size);
  for (std::size_t i = 0; i < t.size; ++i) chi[i] = t.at(i) < 1.0 ? 1.0 : 0.0;
  const auto r = luo_check(SurvivalAmplitude(t, chi)).front();
  CHECK_FALSE(r.satisfied);
  CHECK(r.status == Status::violated);
  CHECK(*r.at >= 0.5);
  CHECK(*r.at < 1.0);

  const UniformGrid shortg = UniformGrid::from_range(0.0, 1.0, 16);
  CHECK_NOTHROW(luo_check(SurvivalAmplitude(shortg, std::vector<Complex>(16, 1.0))));
}

TEST_CASE("short-time expansion") {
  const EnergyDistribution gau(GaussianSpec{0.0, 1.0});
  CHECK(short_time_check(gau, survival_amplitude(gau)).satisfied);
  const EnergyDistribution par(TruncatedParabola{1.0});
  const auto q = survival_amplitude(par);
  CHECK(short_time_check(par, q).satisfied);
  // fourth-order oracle series 1 - x^2 + 3 x^4 / 7
  for (std::size_t i = 1; i <= 10; ++i) {
    const double x = q.times().at(i);
    CHECK(std::abs(q.Q(i) - (1.0 - x * x + 3.0 * std::pow(x, 4) / 7.0)) < 0.2 * std::pow(x, 6) + 1e-15);
  }
  const EnergyDistribution lor(Lorentzian{0.0, 1.0});
  CHECK(code_of([&] { short_time_check(lor, survival_amplitude(lor)); }) == Errc::infinite_variance);
}

TEST_CASE("survival amplitude validation and interpolation") {
  const UniformGrid t = UniformGrid::from_range(0.0, 3.0, 301);
  std::vector<Complex> chi(t.size);
  for (std::size_t i = 0; i < t.size; ++i) chi[i] = std::polar(std::exp(-0.5 * t.at(i) * t.at(i)), -0.7 * t.at(i));
  const SurvivalAmplitude a(t, chi);
  for (double s : {0.0037, 0.5, 1.2345, 2.999}) {
    const Complex want = std::polar(std::exp(-0.5 * s * s), -0.7 * s);
    CHECK(std::abs(a.evaluate(s) - want) < 1e-8);
    CHECK(std::abs(a.evaluate(-s) - std::conj(want)) < 1e-8);
  }
  CHECK(code_of([&] { a.evaluate(3.5); }) == Errc::grid_too_short);
  chi[0] = 0.9;
  CHECK(code_of([&] { SurvivalAmplitude(t, chi); }) == Errc::domain_error);
}

TEST_CASE("Gaussian signal transforms to the Gaussian spectrum") {
  const UniformGrid t = odd_grid(0.1, 3001);
  for (double sigma : {0.5, 1.0, 2.0}) {
    std::vector<double> f(t.size);
    for (std::size_t i = 0; i < t.size; ++i)
      f[i] = std::pow(sigma * sigma / pi, 0.25) * std::exp(-0.5 * sigma * sigma * t.at(i) * t.at(i));
    const SignalPair s = spectrum_from_signal(t, f);
    s.check_normalized();
    for (std::size_t k = 0; k < s.omega.size; k += 31) {
      const double w = s.omega.at(k);
      CHECK(std::abs(s.F[k] - std::pow(pi * sigma * sigma, -0.25) * std::exp(-w * w / (2 * sigma * sigma))) < 1e-12);
    }
    const SpreadMoments pm = positive_frequency_moments(s);
    CHECK(pm.mean == doctest::Approx(sigma / std::sqrt(pi)).epsilon(1e-7));
    CHECK(pm.spread == doctest::Approx(sigma * std::sqrt((pi - 2) / (2 * pi))).epsilon(1e-7));
    CHECK(time_moments(s).spread == doctest::Approx(1.0 / (sigma * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(std::abs(frequency_moments(s).mean) < 1e-8);
  }
}

TEST_CASE("narrow pulse has a flat spectrum") {
  const UniformGrid t = odd_grid(0.01, 501);
  std::vector<double> f(t.size, 0.0);
  f[250] = 1.0 / std::sqrt(t.step);
  const SignalPair s = spectrum_from_signal(t, f);
  for (const Complex& c : s.F) CHECK(std::abs(c) == doctest::Approx(std::abs(s.F[250])).epsilon(1e-12));
}

TEST_CASE("round trip and Parseval for random band-limited signals") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const UniformGrid t = odd_grid(0.1, 601);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> f(t.size, 0.0);
    for (int m = 0; m < 4; ++m) {
      const double a = u(rng), c = 5.0 * u(rng), w = 1.0 + 0.5 * u(rng), nu = 2.0 * u(rng);
      for (std::size_t i = 0; i < t.size; ++i) {
        const double x = (t.at(i) - c) / w;
        f[i] += a * std::exp(-0.5 * x * x) * std::cos(nu * t.at(i));
      }
    }
    const SignalPair s = normalized(spectrum_from_signal(t, f));
    // direct-summation oracle for a few frequencies
    for (std::size_t k = 0; k < s.omega.size; k += 97) {
      Complex ref = 0.0;
      for (std::size_t i = 0; i < t.size; ++i) ref += s.f[i] * std::polar(1.0, -s.omega.at(k) * t.at(i));
      ref *= t.step / std::sqrt(2 * pi);
      CHECK(std::abs(ref - s.F[k]) < 1e-12);
    }
    const SignalPair back = signal_from_spectrum(s.omega, s.F);
    double err = 0.0;
    for (std::size_t i = 0; i < t.size; ++i) err += (back.f[i] - s.f[i]) * (back.f[i] - s.f[i]) * t.step;
    CHECK(std::sqrt(err) < 1e-8);
    back.check_normalized();
    const std::size_t k0 = s.omega.index_of(0.0);
    for (std::size_t d = 1; d < 200; ++d) CHECK(std::abs(s.F[k0 - d] - std::conj(s.F[k0 + d])) < 1e-8);
  }
  CHECK(code_of([&] { signal_from_spectrum(UniformGrid{0.0, 1.0, 3}, std::vector<Complex>(3, 1.0)); }) ==
        Errc::domain_error);
}

TEST_CASE("single-bin spectrum") {
  const UniformGrid w = odd_grid(0.1, 201);
  std::vector<Complex> F(w.size, 0.0);
  F[100 + 37] = F[100 - 37] = 1.0 / std::sqrt(2 * w.step);
  const SpreadMoments pm = positive_frequency_moments(signal_from_spectrum(w, F));
  CHECK(pm.mean == doctest::Approx(3.7).epsilon(1e-12));
  CHECK(pm.spread == doctest::Approx(0.0));
}

TEST_CASE("analytic signal") {
  // |f+|^2 of a zero-mean signal only decays like t^-6, so the window is wide
  const UniformGrid t = odd_grid(0.1, 3001);
  auto make = [&](auto fn) {
    std::vector<double> f(t.size);
    for (std::size_t i = 0; i < t.size; ++i) f[i] = fn(t.at(i));
    return normalized(spectrum_from_signal(t, f));
  };
  // zero-mean wavelet: F(0) = 0
  const SignalPair wave = make([](double x) { return (1 - x * x) * std::exp(-0.5 * x * x); });
  const AnalyticSignal a = analytic_signal(wave);
  CHECK(a.zero_dc);
  const SpreadMoments m = time_moments(wave), mp = time_moments(a.t, std::span<const Complex>(a.f));
  CHECK(std::abs(mp.mean - m.mean) < 1e-6);
  CHECK(std::abs(mp.spread - m.spread) < 1e-6);
  for (std::size_t i = 0; i < t.size; i += 40) CHECK(a.f[i].real() == doctest::Approx(wave.f[i] / std::sqrt(2.0)));

  const SignalPair gau = make([](double x) { return std::exp(-0.5 * x * x); });
  const AnalyticSignal ag = analytic_signal(gau);
  CHECK_FALSE(ag.zero_dc);
  CHECK(std::abs(time_moments(ag.t, std::span<const Complex>(ag.f)).spread - time_moments(gau).spread) > 1e-3);

  // positive-frequency-only input: projection returns sqrt2 times the input
  SignalPair pos = gau;
  const std::size_t k0 = pos.omega.index_of(0.0);
  for (std::size_t k = 0; k <= k0; ++k) pos.F[k] = 0.0;
  for (std::size_t k = k0 + 1; k < pos.F.size(); ++k) pos.F[k] = std::exp(-0.5 * std::pow(pos.omega.at(k) - 3.0, 2));
  const auto fpos = inverse_transform(pos.omega, pos.F, pos.t);
  const AnalyticSignal ap = analytic_signal(pos);
  for (std::size_t i = 0; i < t.size; i += 25) CHECK(std::abs(ap.f[i] - std::sqrt(2.0) * fpos[i]) < 1e-12);
}

TEST_CASE("equivalent widths") {
  CHECK(equivalent_width([](double x) { return std::exp(-0.5 * x * x); }, -inf, inf) ==
        doctest::Approx(std::sqrt(2 * pi)).epsilon(1e-10));
  const double gamma = 1.3;
  const EnergyDistribution lor(Lorentzian{0.4, gamma});
  CHECK(equivalent_width([&](double x) { return lor.density(0.4 + x); }, -inf, inf) ==
        doctest::Approx(pi * gamma / 2).epsilon(1e-9));
  CHECK(code_of([] { equivalent_width([](double x) { return x; }, -1.0, 1.0); }) == Errc::zero_at_origin);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const UniformGrid t = odd_grid(0.05, 1201);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> f(t.size, 0.0);
    for (int m = 0; m < 3; ++m) {
      const double a = 1.0 + u(rng) * 0.5, c = 2.0 * u(rng), w = 1.0 + 0.4 * u(rng);
      for (std::size_t i = 0; i < t.size; ++i) f[i] += a * std::exp(-0.5 * std::pow((t.at(i) - c) / w, 2));
    }
    const SignalPair s = spectrum_from_signal(t, f);
    const double wf = equivalent_width(s.t, std::span<const double>(s.f));
    const Complex wF = equivalent_width(s.omega, std::span<const Complex>(s.F));
    CHECK(std::abs(wf * wF - 2 * pi) < 1e-6);
  }
}

#include "etu/decay_times.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "etu/error.hpp"
#include "etu/roots.hpp"
#include "etu/signal.hpp"

namespace etu {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

// Simpson's rule (3/8 on the last panels when needed) over nodes [0, count).
double simpson_prefix(const std::vector<double>& g, std::size_t count, double h) {
  UniformGrid grid{0.0, h, count};
  return half_line_integral(grid, std::span<const double>(g.data(), count));
}

bool has_analytic_source(const SurvivalAmplitude& Q) { return Q.source() && !Q.source()->is_sampled(); }

template <class T>
T require(std::optional<T> v, const char* what) {
  if (!v) raise(Errc::divergent, what);
  return *v;
}

// dQ/dt at grid node i (i >= 1), exact amplitude if known. Q is even in t,
// which supplies the nodes left of the origin.
double rate(const SurvivalAmplitude& Q, std::size_t i) {
  if (has_analytic_source(Q)) {
    const double t = Q.times().at(i);
    const double h = 1e-3 * std::min(Q.times().step, Q.source()->time_scale());
    return (Q.probability(t - 2 * h) - 8 * Q.probability(t - h) + 8 * Q.probability(t + h) - Q.probability(t + 2 * h)) /
           (12 * h);
  }
  auto q = [&](long j) { return Q.Q(static_cast<std::size_t>(std::abs(j))); };
  const auto k = static_cast<long>(i);
  return (q(k - 2) - 8 * q(k - 1) + 8 * q(k + 1) - q(k + 2)) / (12 * Q.times().step);
}

double rate_at(const SurvivalAmplitude& Q, double t) {
  const double h = 1e-3 * std::min(Q.times().step, Q.source()->time_scale());
  return (Q.probability(t - 2 * h) - 8 * Q.probability(t - h) + 8 * Q.probability(t + h) - Q.probability(t + 2 * h)) /
         (12 * h);
}

double rate_slack(double q, double dq, double omega) {
  return 2.0 * omega * std::sqrt(std::max(0.0, q * (1.0 - q))) - std::abs(dq);
}

}  // namespace

std::optional<double> time_integral(const SurvivalAmplitude& Q, int k, double m, const QuadratureSpec& spec) {
  if (k < 0 || !(m > 0.0)) raise(Errc::domain_error, "time_integral needs k >= 0 and m > 0");
  auto g = [&, k, m](double t) { return std::pow(t, k) * std::pow(std::abs(Q.evaluate(t)), m); };
  if (has_analytic_source(Q)) {
    const EnergyDistribution& P = *Q.source();
    const AmplitudeDecay decay = P.amplitude_decay();
    const double T = P.time_scale();
    if (std::isinf(decay.power)) return integrate([&](double s) { return T * g(s * T); }, 0.0, inf, spec);
    const double excess = m * decay.power - k;
    if (!(excess > 1.0)) return std::nullopt;
    if (decay.period) return integrate_periodic_tail(g, 0.0, *decay.period, excess - 1.0, spec);
    return integrate([&](double s) { return T * g(s * T); }, 0.0, inf, spec);
  }
  const std::size_t n = Q.size();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::pow(Q.times().at(i), k) * std::pow(std::abs(Q.values()[i]), m);
  const double h = Q.times().step;
  const double full = simpson_prefix(v, n, h);
  const double half = simpson_prefix(v, n / 2 + 1, h);
  if (!(std::abs(full - half) <= 1e-3 * std::abs(full))) return std::nullopt;
  return full;
}

std::optional<double> squared_density_integral(const EnergyDistribution& P, const QuadratureSpec& spec) {
  if (!P.peak()) return std::nullopt;
  return P.integrate_over_support([&](double E) { return std::pow(P.density(E), 2); }, spec);
}

double half_life(const SurvivalAmplitude& Q) {
  for (std::size_t i = 1; i < Q.size(); ++i) {
    if (Q.Q(i) > 0.5) continue;
    if (Q.Q(i) == 0.5) return Q.times().at(i);
    const double lo = Q.times().at(i - 1), hi = Q.times().at(i);
    return find_root([&](double t) { return Q.probability(t) - 0.5; }, {lo, hi, 1e-13 * hi});
  }
  raise(Errc::no_crossing, "Q(t) does not fall to 1/2 on the grid");
}

double fleming_tau0(const SurvivalAmplitude& Q) { return require(time_integral(Q, 0, 2.0), "int Q dt diverges"); }

double fleming_tau0(const EnergyDistribution& P) {
  if (auto s = squared_density_integral(P)) return pi * P.hbar() * *s;
  return fleming_tau0(survival_amplitude(P));
}

std::optional<double> Tau0Routes::relative_difference() const {
  if (!spectral || !time) return std::nullopt;
  return std::abs(*spectral - *time) / std::abs(*spectral);
}

Tau0Routes tau0_routes(const EnergyDistribution& P, const SurvivalAmplitude& Q) {
  Tau0Routes r;
  if (auto s = squared_density_integral(P)) r.spectral = pi * P.hbar() * *s;
  r.time = time_integral(Q, 0, 2.0);
  return r;
}

ModifiedTimes modified_times(const EnergyDistribution& P, const SurvivalAmplitude& Q) {
  const double root_int = require(time_integral(Q, 0, 1.0), "int sqrt(Q) dt diverges");
  const double tau0 = fleming_tau0(Q);
  const double peak = require(P.peak(), "P(E) has no finite maximum");
  const double p2 = require(squared_density_integral(P), "int P^2 dE diverges");
  ModifiedTimes m{};
  m.tau_star = root_int * root_int / (4.0 * tau0);
  m.deltaE_star = p2 / (peak * peak);
  m.tau_2star = 0.5 * root_int;
  m.deltaE_2star = 1.0 / peak;
  m.tau0 = tau0;
  m.tau_residual = std::abs(m.tau_star - m.tau_2star * m.tau_2star / tau0) / m.tau_star;
  const double predicted = m.deltaE_2star * m.deltaE_2star * tau0 / (pi * P.hbar());
  m.energy_residual = std::abs(m.deltaE_star - predicted) / m.deltaE_star;
  return m;
}

SquaredDensitySpread squared_density_spread(const EnergyDistribution& P, const QuadratureSpec& spec) {
  const double p2 = require(squared_density_integral(P, spec), "int P^2 dE diverges");
  auto weighted = [&](auto fn) {
    return P.integrate_over_support([&](double E) { return fn(E) * std::pow(P.density(E), 2); }, spec);
  };
  const double mean = weighted([](double E) { return E; }) / p2;
  const double var = weighted([&](double E) { return (E - mean) * (E - mean); }) / p2;
  if (!std::isfinite(var)) raise(Errc::divergent, "(E - <E>)^2 P^2 is not integrable");
  return {mean, std::sqrt(var)};
}

WignerFormTimes wigner_form_times(const EnergyDistribution& P, const SurvivalAmplitude& Q) {
  const double tau0 = fleming_tau0(Q);
  const double t2 = require(time_integral(Q, 2, 2.0), "int t^2 Q dt diverges");
  const SquaredDensitySpread s = squared_density_spread(P);
  WignerFormTimes w{std::sqrt(t2 / tau0), s.epsilon, s.mean, {}};
  w.bound = make_bound("Wigner-tilde", std::string(P.kind()), w.epsilon * w.tau_tilde, Relation::geq, 0.5 * Q.hbar(),
                       "Wigner-form uncertainty relation eps tau~ >= hbar/2", 1e-9 * Q.hbar());
  return w;
}

FujiwaraTimes fujiwara_times(const SurvivalAmplitude& Q, const EnergyDistribution& P) {
  const double tau0 = fleming_tau0(Q);
  const double t1 = require(time_integral(Q, 1, 2.0), "int t Q dt diverges");
  const double t2 = require(time_integral(Q, 2, 2.0), "int t^2 Q dt diverges");
  const SquaredDensitySpread s = squared_density_spread(P);
  FujiwaraTimes f{};
  f.tau1 = t1 / tau0;
  f.delta1t = std::sqrt(std::max(0.0, t2 / tau0 - f.tau1 * f.tau1));
  f.epsilon = s.epsilon;
  f.product = f.epsilon * f.delta1t;
  return f;
}

double shortest_interval(const EnergyDistribution& P, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) raise(Errc::domain_error, "alpha must lie in (0, 1)");
  if (const auto* d = std::get_if<TwoPoint>(&P.form())) {
    if (alpha <= std::max(d->w, 1.0 - d->w)) return 0.0;
    return std::abs(d->E2 - d->E1);
  }
  const double edge = 1e-13;
  const double pmax = 1.0 - alpha - edge;
  auto width = [&](double p) { return P.quantile(p + alpha) - P.quantile(p); };
  constexpr int scan = 64;
  int best = 0;
  double best_w = inf;
  for (int j = 0; j <= scan; ++j) {
    const double p = edge + (pmax - edge) * j / scan;
    const double w = width(p);
    if (w < best_w) {
      best_w = w;
      best = j;
    }
  }
  const double lo = edge + (pmax - edge) * std::max(0, best - 1) / scan;
  const double hi = edge + (pmax - edge) * std::min(scan, best + 1) / scan;
  return std::min(best_w, minimize(width, lo, hi).value);
}

double amplitude_level_time(const SurvivalAmplitude& Q, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) raise(Errc::domain_error, "beta must lie in (0, 1)");
  for (std::size_t i = 1; i < Q.size(); ++i) {
    const double a = std::abs(Q.values()[i]);
    if (a > beta) continue;
    if (a == beta) return Q.times().at(i);
    const double lo = Q.times().at(i - 1), hi = Q.times().at(i);
    return find_root([&](double t) { return std::abs(Q.evaluate(t)) - beta; }, {lo, hi, 1e-13 * hi});
  }
  raise(Errc::level_not_reached, "|chi(t)| does not fall to beta on the grid");
}

HilgevoordUffink hilgevoord_uffink(const EnergyDistribution& P, double alpha, const SurvivalAmplitude& Q, double beta) {
  if (!(alpha > 0.0 && alpha < 1.0) || !(beta > 0.0 && beta < 1.0))
    raise(Errc::domain_error, "alpha and beta must lie in (0, 1)");
  if (beta > 2.0 * alpha - 1.0) raise(Errc::bound_inapplicable, "the width bound needs beta <= 2 alpha - 1");
  HilgevoordUffink h{shortest_interval(P, alpha), amplitude_level_time(Q, beta), {}};
  const double rhs = 2.0 * Q.hbar() * std::acos((beta + 1.0 - alpha) / alpha);
  h.bound = make_bound("HU", std::string(P.kind()), h.tau_beta * h.W_alpha, Relation::geq, rhs,
                       "Hilgevoord-Uffink width relation tau_beta W_alpha >= 2 hbar arccos((beta+1-alpha)/alpha)",
                       1e-9 * Q.hbar());
  if (std::holds_alternative<Lorentzian>(P.form()))
    h.bound.note = "exponential law: tau_beta = 2 tau ln(1/beta) by direct inversion; 4 tau ln(1/beta) is quoted in the literature";
  return h;
}

std::vector<BoundReport> mandelstam_tamm_check(const SurvivalAmplitude& Q, double deltaE) {
  if (!(deltaE > 0.0) || !std::isfinite(deltaE)) raise(Errc::domain_error, "deltaE must be positive and finite");
  const double hbar = Q.hbar();
  const double omega = deltaE / hbar;
  const std::string subject = Q.source() ? std::string(Q.source()->kind()) : "sampled-Q";
  bool guaranteed = true;
  bool exponential = false;
  if (Q.source()) {
    const Moments m = Q.source()->moments();
    guaranteed = m.finite && deltaE >= std::sqrt(m.variance) * (1.0 - 1e-12);
    exponential = std::holds_alternative<Lorentzian>(Q.source()->form());
  }
  std::vector<BoundReport> out;

  {  // integrated cosine bound on its window
    const double t_end = pi / (2.0 * omega);
    double worst = inf;
    std::size_t at = 1;
    // t = 0 holds with equality for every state and says nothing
    for (std::size_t i = 1; i < Q.size() && Q.times().at(i) <= t_end; ++i) {
      const double c = std::cos(omega * Q.times().at(i));
      const double s = Q.Q(i) - c * c;
      if (s < worst) worst = s, at = i;
    }
    const double c = std::cos(omega * Q.times().at(at));
    BoundReport r = make_bound("MT-cosine", subject, Q.Q(at), Relation::geq, c * c,
                               "Mandelstam-Tamm Q(t) >= cos^2(DeltaE t/hbar), t <= pi hbar/(2 DeltaE)", 1e-10, guaranteed);
    r.at = Q.times().at(at);
    out.push_back(r);
  }

  {  // differential rate bound
    double worst = inf;
    std::size_t at = 1;
    std::size_t last_violation = 0;
    bool contiguous = true;
    for (std::size_t i = 1; i + 2 < Q.size(); ++i) {
      const double s = rate_slack(Q.Q(i), rate(Q, i), omega);
      if (s < worst) worst = s, at = i;
      if (s < 0.0 && contiguous) {
        last_violation = i;
      } else {
        contiguous = false;
      }
    }
    const double dq = rate(Q, at);
    const double rhs = 2.0 * omega * std::sqrt(std::max(0.0, Q.Q(at) * (1.0 - Q.Q(at))));
    BoundReport r = make_bound("MT-rate", subject, std::abs(dq), Relation::leq, rhs,
                               "Mandelstam-Tamm rate |dQ/dt| <= (2 DeltaE/hbar) sqrt(Q(1-Q))", 1e-8 * omega, guaranteed);
    r.at = Q.times().at(at);
    out.push_back(r);

    if (exponential) {
      const double tau = hbar / std::get<Lorentzian>(Q.source()->form()).Gamma;
      const double predicted = tau * std::log1p(std::pow(hbar / (2.0 * tau * deltaE), 2));
      auto slack = [&](double t) { return rate_slack(Q.probability(t), rate_at(Q, t), omega); };
      const double lo = last_violation == 0 ? 1e-9 * tau : Q.times().at(last_violation);
      const double hi = Q.times().at(last_violation + 1);
      double measured = lo;
      if (slack(lo) < 0.0 && slack(hi) >= 0.0) measured = find_root(slack, {lo, hi, 1e-13 * hi});
      BoundReport w = make_bound("ExpWindow", subject, measured, Relation::eq, predicted,
                                 "exponential decay breaks the rate bound for t < tau ln[1 + hbar^2/(2 tau DeltaE)^2]",
                                 1e-6 * predicted, false);
      w.note = "end of the interval on which the exponential law violates the rate bound";
      out.push_back(w);
    }
  }

  const char* halflife_src = "Mandelstam-Tamm half-life bound T1/2 DeltaE >= pi hbar/4";
  try {
    const double t_half = half_life(Q);
    out.push_back(make_bound("MT-halflife", subject, t_half * deltaE, Relation::geq, pi * hbar / 4.0, halflife_src,
                             1e-9 * hbar, guaranteed));
  } catch (const Error& e) {
    if (e.code() != Errc::no_crossing) throw;
    out.push_back(not_applicable("MT-halflife", subject, halflife_src, "Q(t) never reaches 1/2 on the grid"));
  }

  const auto tau0 = time_integral(Q, 0, 2.0);
  const char* fleming_src = "Fleming bound tau0 DeltaE >= pi hbar/4";
  const char* gislason_src = "Gislason-Sabelli-Wood sharp bound tau0 DeltaE >= 3 pi hbar/(5 sqrt5)";
  if (tau0) {
    out.push_back(make_bound("Fleming", subject, *tau0 * deltaE, Relation::geq, pi * hbar / 4.0, fleming_src,
                             1e-8 * hbar, guaranteed));
    out.push_back(make_bound("Gislason", subject, *tau0 * deltaE, Relation::geq, 3.0 * pi * hbar / (5.0 * std::sqrt(5.0)),
                             gislason_src, 1e-8 * hbar, guaranteed));
  } else {
    out.push_back(not_applicable("Fleming", subject, fleming_src, "tau0 diverges"));
    out.push_back(not_applicable("Gislason", subject, gislason_src, "tau0 diverges"));
  }
  return out;
}

StayTime wigner_stay_time(const UniformGrid& E, std::span<const std::complex<double>> eta, double E0, double hbar) {
  if (E.size < 8 || eta.size() != E.size) raise(Errc::domain_error, "eta needs at least 8 samples matching its grid");
  if (std::abs(E.start) > 1e-12 * E.step) raise(Errc::domain_error, "eta must be sampled from E = 0");
  if (!(hbar > 0.0)) raise(Errc::domain_error, "hbar must be positive");
  double peak = 0.0;
  for (const auto& v : eta) peak = std::max(peak, std::abs(v));
  if (!(std::abs(eta[0]) <= 1e-8 * peak)) raise(Errc::nonzero_at_origin, "eta(0) must vanish");

  const std::size_t n = E.size;
  const double h = E.step;
  std::vector<std::complex<double>> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto f = [&](std::size_t j) { return eta[j]; };
    if (i >= 2 && i + 2 < n) {
      d[i] = (f(i - 2) - 8.0 * f(i - 1) + 8.0 * f(i + 1) - f(i + 2)) / (12.0 * h);
    } else if (i < 2) {
      const std::size_t b = 0;
      d[i] = i == 0 ? (-25.0 * f(b) + 48.0 * f(b + 1) - 36.0 * f(b + 2) + 16.0 * f(b + 3) - 3.0 * f(b + 4)) / (12.0 * h)
                    : (-3.0 * f(b) - 10.0 * f(b + 1) + 18.0 * f(b + 2) - 6.0 * f(b + 3) + f(b + 4)) / (12.0 * h);
    } else {
      const std::size_t b = n - 1;
      d[i] = i == b ? (25.0 * f(b) - 48.0 * f(b - 1) + 36.0 * f(b - 2) - 16.0 * f(b - 3) + 3.0 * f(b - 4)) / (12.0 * h)
                    : (3.0 * f(b) + 10.0 * f(b - 1) - 18.0 * f(b - 2) + 6.0 * f(b - 3) - f(b - 4)) / (12.0 * h);
    }
  }
  std::vector<double> m0(n), m2(n), dd(n);
  for (std::size_t i = 0; i < n; ++i) {
    m0[i] = std::norm(eta[i]);
    const double x = E.at(i) - E0;
    m2[i] = x * x * m0[i];
    dd[i] = std::norm(d[i]);
  }
  const double norm = simpson_prefix(m0, n, h);
  if (!(norm > 0.0)) raise(Errc::domain_error, "eta has zero norm");
  StayTime s{};
  s.tau_W = hbar * std::sqrt(simpson_prefix(dd, n, h) / norm);
  s.eps_W = std::sqrt(simpson_prefix(m2, n, h) / norm);
  s.product = s.tau_W * s.eps_W;
  s.bound = make_bound("WignerStay", "eta", s.product, Relation::geq, 0.5 * hbar,
                       "Wigner stay-time relation eps_W tau_W > hbar/2", 0.0);
  if (s.product <= 0.5 * hbar) s.bound.satisfied = false, s.bound.status = Status::violated;
  return s;
}

DecayTimes decay_times(const EnergyDistribution& P, const SurvivalAmplitude& Q) {
  auto attempt = [](auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const Error& e) {
      if (e.code() == Errc::divergent || e.code() == Errc::no_crossing) return std::nullopt;
      throw;
    }
  };
  DecayTimes d;
  const Moments m = P.moments();
  if (m.finite) d.deltaE = std::sqrt(m.variance);
  d.t_half = attempt([&] { return half_life(Q); });
  d.tau0 = attempt([&] { return fleming_tau0(Q); });
  if (auto s = time_integral(Q, 0, 1.0)) {
    if (d.tau0) d.tau_star = *s * *s / (4.0 * *d.tau0);
    d.tau_2star = 0.5 * *s;
  }
  if (const auto peak = P.peak()) {
    d.deltaE_2star = 1.0 / *peak;
    if (auto p2 = squared_density_integral(P)) d.deltaE_star = *p2 / (*peak * *peak);
  }
  d.epsilon = attempt([&] { return squared_density_spread(P).epsilon; });
  if (d.tau0) {
    if (auto t1 = time_integral(Q, 1, 2.0)) d.tau1 = *t1 / *d.tau0;
    if (auto t2 = time_integral(Q, 2, 2.0)) {
      d.tau_tilde = std::sqrt(*t2 / *d.tau0);
      if (d.tau1) d.delta1t = std::sqrt(std::max(0.0, *t2 / *d.tau0 - *d.tau1 * *d.tau1));
    }
  }
  return d;
}

}  // namespace etu

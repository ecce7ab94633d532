#include "etu/speed_limits.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "etu/error.hpp"
#include "etu/roots.hpp"

namespace etu {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double zero_threshold = 1e-6;

std::string format_name(const char* pattern, double a, double b) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double factorial(int n) { return std::tgamma(n + 1.0); }

bool mt_guaranteed(const SurvivalAmplitude& Q, double deltaE) {
  if (!Q.source()) return true;
  const Moments m = Q.source()->moments();
  return m.finite && deltaE >= std::sqrt(m.variance) * (1.0 - 1e-12);
}

std::string subject_of(const SurvivalAmplitude& Q) {
  return Q.source() ? std::string(Q.source()->kind()) : std::string("sampled-Q");
}

// Refines a grid minimum of |chi| near node i to the zero, or returns a
// negative value when the minimum is not a zero.
double refine_zero(const SurvivalAmplitude& Q, std::size_t i) {
  const UniformGrid& g = Q.times();
  const double lo = g.at(i - 1), hi = g.at(std::min(i + 1, g.size - 1));
  auto modulus = [&](double t) { return std::abs(Q.evaluate(t)); };
  const Minimum m = minimize(modulus, lo, hi);
  if (!(m.value < zero_threshold)) return -1.0;
  // A transversal zero changes sign along the direction of chi just before it.
  const double dt = 0.5 * g.step;
  const double ta = std::max(m.x - dt, 0.0);
  const Complex ref = std::conj(Q.evaluate(ta));
  auto projection = [&](double t) { return (Q.evaluate(t) * ref).real(); };
  const double tb = std::min(m.x + dt, Q.t_max());
  if (projection(ta) > 0.0 && projection(tb) < 0.0) return find_root(projection, {ta, tb, 1e-15 * (1.0 + tb)});
  return m.x;
}

}  // namespace

SpeedLimitInput prepare_speed_limit(const EnergyDistribution& P) {
  const double lo = P.min_energy();
  if (!std::isfinite(lo)) raise(Errc::not_applicable, "spectrum is unbounded below");
  EnergyDistribution shifted = P.shifted(-lo);
  SurvivalAmplitude Q = survival_amplitude(shifted);
  return {std::move(shifted), std::move(Q), -lo};
}

double orthogonality_time(const SurvivalAmplitude& Q) {
  const std::size_t n = Q.size();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double a = std::abs(Q.values()[i]);
    // Strict dips only, and not inside a tail that has decayed to the
    // underflow range: a monotone decay is not an orthogonal state.
    const double left = std::abs(Q.values()[i - 1]), right = std::abs(Q.values()[i + 1]);
    if (left < 1e-100 || !(a < left && a <= right)) continue;
    if (a > 0.5) continue;
    const double t = refine_zero(Q, i);
    if (t > 0.0) return t;
  }
  raise(Errc::not_reached, "chi(t) has no zero on the grid");
}

double level_time(const SurvivalAmplitude& Q, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) raise(Errc::domain_error, "alpha must lie in [0, 1)");
  if (alpha == 0.0) {
    try {
      return orthogonality_time(Q);
    } catch (const Error& e) {
      if (e.code() == Errc::not_reached) raise(Errc::level_not_reached, "Q(t) never reaches 0");
      throw;
    }
  }
  for (std::size_t i = 1; i < Q.size(); ++i) {
    if (Q.Q(i) > alpha) continue;
    if (Q.Q(i) == alpha) return Q.times().at(i);
    const double lo = Q.times().at(i - 1), hi = Q.times().at(i);
    return find_root([&](double t) { return Q.probability(t) - alpha; }, {lo, hi, 1e-15 * (1.0 + hi)});
  }
  raise(Errc::level_not_reached, "Q(t) does not fall to alpha on the grid");
}

BoundReport margolus_levitin_bound(const SpeedLimitInput& in) {
  const char* src = "Margolus-Levitin <E> T_perp >= pi hbar/2 with the ground energy at zero";
  const std::string subject(in.P.kind());
  const Moments m = in.P.moments();
  if (!std::isfinite(m.mean)) return not_applicable("ML", subject, src, "<E> diverges");
  double t_perp;
  try {
    t_perp = orthogonality_time(in.Q);
  } catch (const Error& e) {
    if (e.code() != Errc::not_reached) throw;
    return not_applicable("ML", subject, src, "no orthogonal state is reached");
  }
  const double hbar = in.P.hbar();
  BoundReport r = make_bound("ML", subject, m.mean * t_perp, Relation::geq, 0.5 * pi * hbar, src, 1e-9 * hbar);
  r.at = t_perp;
  r.note = format_name("spectrum shifted by %.12g to put the ground energy at zero", in.shift + 0.0, 0.0);
  return r;
}

BoundReport margolus_levitin_bound(const EnergyDistribution& P) {
  const char* src = "Margolus-Levitin <E> T_perp >= pi hbar/2 with the ground energy at zero";
  if (!std::isfinite(P.min_energy())) return not_applicable("ML", std::string(P.kind()), src, "spectrum unbounded below");
  return margolus_levitin_bound(prepare_speed_limit(P));
}

BoundReport luo_zhang_bound(const SpeedLimitInput& in, double alpha, double p) {
  if (!(alpha >= 0.0 && alpha < 1.0)) raise(Errc::p_out_of_range, "alpha must lie in [0, 1)");
  const double p_max = alpha == 0.0 ? std::numeric_limits<double>::infinity() : 0.5 * pi * std::sqrt(1.0 / alpha - 1.0);
  if (!(p > 0.0 && p <= p_max)) raise(Errc::p_out_of_range, "p must lie in (0, (pi/2) sqrt(1/alpha - 1)]");
  const auto Ep = in.P.absolute_moment(p);
  if (!Ep || !std::isfinite(*Ep)) raise(Errc::moment_divergent, "<E^p> diverges");
  const double hbar = in.P.hbar();
  const double head = 1.0 - std::sqrt(alpha * (1.0 + 4.0 * p * p / (pi * pi)));
  const double rhs = pi * hbar * std::pow(std::max(0.0, head) / (2.0 * *Ep), 1.0 / p);
  const double t_alpha = level_time(in.Q, alpha);
  BoundReport r = make_bound(format_name("LuoZhang(%g,%g)", alpha, p), std::string(in.P.kind()), t_alpha, Relation::geq,
                             rhs, "Luo-Zhang T_alpha >= pi [(1 - sqrt(alpha(1 + 4p^2/pi^2)))/(2<E^p>)]^(1/p)",
                             1e-9 * std::max(rhs, hbar / in.P.energy_scale()));
  r.at = t_alpha;
  return r;
}

BoundReport luo_zhang_bound(const EnergyDistribution& P, double alpha, double p) {
  return luo_zhang_bound(prepare_speed_limit(P), alpha, p);
}

double luo_zhang_margolus_route(const SpeedLimitInput& in, double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) raise(Errc::p_out_of_range, "alpha must lie in [0, 1)");
  const double mean = in.P.moments().mean;
  if (!std::isfinite(mean) || !(mean > 0.0)) raise(Errc::moment_divergent, "<E> must be finite and positive");
  // max over phi of cos phi - (2/pi) sin phi, found numerically.
  const Minimum m = minimize([](double phi) { return -(std::cos(phi) - 2.0 / pi * std::sin(phi)); }, -pi, 0.0);
  const double level = std::sqrt(alpha) * -m.value;
  const double hbar = in.P.hbar();
  auto g = [&](double t) { return 1.0 - 2.0 * mean * t / (pi * hbar) - level; };
  const double hi = pi * hbar / (2.0 * mean);
  if (g(0.0) <= 0.0) return 0.0;
  return find_root(g, {0.0, hi, 1e-15 * hi});
}

BoundReport mt_orthogonality_bound(const SurvivalAmplitude& Q, double deltaE) {
  const char* src = "Mandelstam-Tamm orthogonality time DeltaE T_perp >= pi hbar/2";
  if (!(deltaE > 0.0) || !std::isfinite(deltaE)) raise(Errc::domain_error, "deltaE must be positive and finite");
  double t_perp;
  try {
    t_perp = orthogonality_time(Q);
  } catch (const Error& e) {
    if (e.code() != Errc::not_reached) throw;
    return not_applicable("MT-orthogonal", subject_of(Q), src, "no orthogonal state is reached");
  }
  BoundReport r = make_bound("MT-orthogonal", subject_of(Q), deltaE * t_perp, Relation::geq, 0.5 * pi * Q.hbar(), src,
                             1e-9 * Q.hbar(), mt_guaranteed(Q, deltaE));
  r.at = t_perp;
  return r;
}

std::vector<BoundReport> pfeifer_envelope(const UniformGrid& times, std::span<const double> overlap, double delta0,
                                          double dE, double hbar) {
  if (overlap.size() != times.size || times.size == 0) raise(Errc::domain_error, "overlap must match the time grid");
  if (!(delta0 >= 0.0 && delta0 <= 0.5 * pi)) raise(Errc::domain_error, "delta0 must lie in [0, pi/2]");
  if (!(dE >= 0.0) || !std::isfinite(dE)) raise(Errc::domain_error, "energy spread must be finite");
  const char* src = "Pfeifer envelope sin(delta - h_t) <= |<phi|psi_t>| <= sin(delta + h_t)";
  double worst_lo = std::numeric_limits<double>::infinity(), worst_hi = worst_lo;
  std::size_t at_lo = 0, at_hi = 0;
  auto lower = [&](std::size_t i) { return std::sin(std::clamp(delta0 - dE * times.at(i) / hbar, 0.0, 0.5 * pi)); };
  auto upper = [&](std::size_t i) { return std::sin(std::clamp(delta0 + dE * times.at(i) / hbar, 0.0, 0.5 * pi)); };
  for (std::size_t i = 0; i < times.size; ++i) {
    const double s_lo = overlap[i] - lower(i), s_hi = upper(i) - overlap[i];
    if (s_lo < worst_lo) worst_lo = s_lo, at_lo = i;
    if (s_hi < worst_hi) worst_hi = s_hi, at_hi = i;
  }
  BoundReport lo = make_bound("Pfeifer", "overlap", overlap[at_lo], Relation::geq, lower(at_lo), src, 1e-10);
  lo.at = times.at(at_lo);
  lo.note = "lower branch";
  BoundReport hi = make_bound("Pfeifer", "overlap", overlap[at_hi], Relation::leq, upper(at_hi), src, 1e-10);
  hi.at = times.at(at_hi);
  hi.note = "upper branch";
  return {lo, hi};
}

std::vector<BoundReport> pfeifer_envelope(const SurvivalAmplitude& Q, double deltaE) {
  std::vector<double> overlap(Q.size());
  for (std::size_t i = 0; i < Q.size(); ++i) overlap[i] = std::abs(Q.values()[i]);
  auto r = pfeifer_envelope(Q.times(), overlap, 0.5 * pi, deltaE, Q.hbar());
  for (auto& x : r) {
    x.subject = subject_of(Q);
    x.guaranteed = mt_guaranteed(Q, deltaE);
    if (!x.guaranteed && x.status != Status::not_applicable) x.status = Status::informational;
  }
  return r;
}

std::vector<BoundReport> yurtsever_chain(const SpeedLimitInput& in, int n_max) {
  if (n_max < 1) raise(Errc::domain_error, "n_max must be at least 1");
  const double T = orthogonality_time(in.Q);
  const double hbar = in.P.hbar();
  std::vector<double> term(static_cast<std::size_t>(n_max) + 1);
  for (int k = 0; k <= n_max; ++k) {
    const auto m = k == 0 ? std::optional<double>(1.0) : in.P.central_moment(2 * k);
    if (!m || !std::isfinite(*m)) raise(Errc::moment_divergent, "central moment of order " + std::to_string(2 * k) + " diverges");
    term[static_cast<std::size_t>(k)] = *m * std::pow(T / hbar, 2 * k) / factorial(2 * k);
  }
  std::vector<BoundReport> out;
  for (int n = 1; n <= n_max; ++n) {
    double rhs = 0.0;
    for (int k = 0; k < n; ++k) rhs += ((n - k + 1) % 2 == 0 ? 1.0 : -1.0) * term[static_cast<std::size_t>(k)];
    const double lhs = term[static_cast<std::size_t>(n)];
    BoundReport r = make_bound("Yurtsever(" + std::to_string(n) + ")", std::string(in.P.kind()), lhs, Relation::geq, rhs,
                               "Yurtsever moment chain at the orthogonality time", 1e-9 * std::max(1.0, std::abs(rhs)));
    r.at = T;
    out.push_back(r);
  }
  return out;
}

std::vector<BoundReport> yurtsever_chain(const EnergyDistribution& P, int n_max) {
  return yurtsever_chain(prepare_speed_limit(P), n_max);
}

double margolus_levitin_kernel(double x) { return std::cos(x) - 1.0 + 2.0 / pi * (x + std::sin(x)); }

double luo_zhang_kernel(double x, double p) {
  return std::cos(x) + 2.0 * p / pi * std::sin(x) - 1.0 + 2.0 * std::pow(x / pi, p);
}

}  // namespace etu

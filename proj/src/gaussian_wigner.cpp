#include "etu/gaussian_wigner.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "etu/error.hpp"
#include "etu/kernels.hpp"

namespace etu {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

}  // namespace

GaussianWignerState::GaussianWignerState(const GaussianStateParams& p) : p_(p) {
  if (!positive_finite(p.sigma_q) || !positive_finite(p.sigma_p))
    raise(Errc::invalid_state, "sigma_q and sigma_p must be positive");
  if (!positive_finite(p.mass) || !positive_finite(p.hbar)) raise(Errc::invalid_state, "mass and hbar must be positive");
  if (!(p.omega >= 0.0) || !std::isfinite(p.omega)) raise(Errc::invalid_state, "omega must be non-negative");
  if (!std::isfinite(p.q_mean) || !std::isfinite(p.p_mean) || !std::isfinite(p.sigma_qp))
    raise(Errc::invalid_state, "state parameters must be finite");
  const double floor = 0.25 * p.hbar * p.hbar;
  if (!(determinant() >= floor * (1.0 - 1e-12)))
    raise(Errc::invalid_state, "sigma_q sigma_p - sigma_qp^2 must be at least hbar^2/4");
}

GaussianWignerState GaussianWignerState::coherent(double mass, double omega, double hbar, double q, double p) {
  if (!positive_finite(omega)) raise(Errc::invalid_state, "a coherent state needs omega > 0");
  return GaussianWignerState({q, p, hbar / (2 * mass * omega), hbar * mass * omega / 2, 0.0, mass, omega, hbar});
}

GaussianWignerState GaussianWignerState::thermal(double mass, double omega, double hbar, double D) {
  if (!positive_finite(omega) || !positive_finite(D)) raise(Errc::invalid_state, "a thermal state needs omega, D > 0");
  const double r = std::sqrt(D);
  return GaussianWignerState({0.0, 0.0, r / (mass * omega), mass * omega * r, 0.0, mass, omega, hbar});
}

double GaussianWignerState::wigner(double q, double p) const {
  const double D = determinant();
  const double dq = q - p_.q_mean, dp = p - p_.p_mean;
  const double form = p_.sigma_p * dq * dq + p_.sigma_q * dp * dp - 2 * p_.sigma_qp * dq * dp;
  return p_.hbar / std::sqrt(D) * std::exp(-form / (2 * D));
}

double GaussianWignerState::wigner_rate(double q, double p) const {
  const double D = determinant();
  const double dq = q - p_.q_mean, dp = p - p_.p_mean;
  const double w = wigner(q, p);
  const double dW_dq = -w * (p_.sigma_p * dq - p_.sigma_qp * dp) / D;
  const double dW_dp = -w * (p_.sigma_q * dp - p_.sigma_qp * dq) / D;
  return p_.mass * p_.omega * p_.omega * q * dW_dp - p / p_.mass * dW_dq;
}

double purity(const GaussianWignerState& s) { return s.params().hbar / (2 * std::sqrt(s.determinant())); }

double moment_combination(const GaussianWignerState& s) {
  const auto& p = s.params();
  const double m = p.mass, w2 = p.omega * p.omega;
  return m * m * w2 * w2 * (p.sigma_q * p.sigma_q + 2 * p.sigma_q * p.q_mean * p.q_mean) +
         (p.sigma_p * p.sigma_p + 2 * p.sigma_p * p.p_mean * p.p_mean) / (m * m) +
         2 * w2 * (p.sigma_qp * p.sigma_qp + 2 * p.sigma_qp * p.q_mean * p.p_mean);
}

double energy_dispersion(const GaussianWignerState& s) {
  const double B = moment_combination(s);
  const double hw = s.params().hbar * s.params().omega;
  const double var = 0.5 * B - 0.25 * hw * hw;
  if (var < -1e-12 * (0.5 * B + 0.25 * hw * hw)) raise(Errc::negative_variance, "B/2 < (hbar omega)^2/4");
  return std::sqrt(std::max(0.0, var));
}

double stationarity_time(const GaussianWignerState& s) {
  const double B = moment_combination(s);
  const double D = s.determinant();
  const double excess = B - 2 * D * s.params().omega * s.params().omega;
  if (excess <= 1e-13 * B) return inf;
  return std::sqrt(8 * std::pow(D, 1.5) / (s.params().hbar * excess));
}

double stationarity_product(const GaussianWignerState& s) {
  const double T0 = stationarity_time(s);
  const double dE = energy_dispersion(s);
  if (std::isinf(T0)) return dE > 0.0 ? inf : std::numeric_limits<double>::quiet_NaN();
  const double x = dE * T0 / s.params().hbar;
  return 2 * x * x;
}

BoundReport stationarity_bound_check(const GaussianWignerState& s) {
  const char* src = "purity-dependent stationarity bound DeltaE T0 >= hbar (2 mu^3)^(-1/2) for Gaussian states";
  const double T0 = stationarity_time(s);
  const double dE = energy_dispersion(s);
  if (std::isinf(T0) && dE == 0.0) return not_applicable("ET0G", "gaussian-state", src, "stationary energy eigenstate");
  const double mu = purity(s);
  const double hbar = s.params().hbar;
  BoundReport r = make_bound("ET0G", "gaussian-state", std::isinf(T0) ? inf : dE * T0, Relation::geq,
                             hbar / std::sqrt(2 * mu * mu * mu), src, 1e-9 * hbar);
  char buf[160];
  std::snprintf(buf, sizeof buf, "2(DeltaE T0/hbar)^2 = %.12g, mu^-3 = %.12g", stationarity_product(s),
                1.0 / (mu * mu * mu));
  r.note = buf;
  return r;
}

double wigner_T0_oracle(const GaussianWignerState& s, std::size_t n, double box) {
  if (n < 16 || !(box > 0.0)) raise(Errc::domain_error, "oracle grid needs n >= 16 and a positive box");
  const auto& p = s.params();
  const double hq = box * std::sqrt(p.sigma_q), hp = box * std::sqrt(p.sigma_p);
  const UniformGrid qg = UniformGrid::from_range(p.q_mean - hq, p.q_mean + hq, n);
  const UniformGrid pg = UniformGrid::from_range(p.p_mean - hp, p.p_mean + hp, n);
  const double integral = kernels::phase_space_trapezoid(
      [&s](double q, double pp) {
        const double r = s.wigner_rate(q, pp);
        return r * r;
      },
      qg, pg);
  const double inv2 = integral / (2 * std::numbers::pi * p.hbar);
  return inv2 > 0.0 ? 1.0 / std::sqrt(inv2) : inf;
}

PureStateTimes pure_state_times(double deltaE, double hbar) {
  if (!(deltaE > 0.0) || !std::isfinite(deltaE)) raise(Errc::zero_dispersion, "pure-state times need DeltaE > 0");
  if (!positive_finite(hbar)) raise(Errc::domain_error, "hbar must be positive");
  PureStateTimes t{hbar / (std::sqrt(2.0) * deltaE), hbar / deltaE, {}};
  t.eberly_singh = make_bound("EberlySingh", "pure-state", deltaE * t.T1, Relation::geq, hbar,
                              "Eberly-Singh DeltaE T1 >= hbar, equality for pure states", 1e-12 * hbar);
  return t;
}

FockRelaxation fock_relaxation(int M, double gamma) {
  if (M < 1) raise(Errc::domain_error, "M = 0 is stationary (T0 is infinite)");
  if (!positive_finite(gamma)) raise(Errc::domain_error, "gamma must be positive");
  // Rates at t = 0 with p_M = 1; only n = M and n = M - 1 move.
  double sum = 0.0;
  for (int n = 0; n <= M; ++n) {
    const double p_next = n + 1 == M ? 1.0 : 0.0;
    const double p_n = n == M ? 1.0 : 0.0;
    const double rate = 2 * gamma * ((n + 1) * p_next - n * p_n);
    sum += rate * rate;
  }
  return {1.0 / std::sqrt(sum), 0.0, 0.0};
}

}  // namespace etu

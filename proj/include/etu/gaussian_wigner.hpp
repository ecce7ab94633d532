#pragma once

#include <cstddef>

#include "etu/bound_report.hpp"

namespace etu {

/// Parameters of a Gaussian Wigner function for the oscillator
/// H = p^2/(2m) + m omega^2 q^2/2. sigma_q and sigma_p are variances,
/// sigma_qp the covariance. omega = 0 is a free particle.
struct GaussianStateParams {
  double q_mean = 0.0;
  double p_mean = 0.0;
  double sigma_q = 0.5;
  double sigma_p = 0.5;
  double sigma_qp = 0.0;
  double mass = 1.0;
  double omega = 1.0;
  double hbar = 1.0;
};

/// Validated Gaussian state. Construction throws InvalidState unless the
/// variances are positive, mass and hbar are positive, omega >= 0 and
/// D = sigma_q sigma_p - sigma_qp^2 >= hbar^2/4.
class GaussianWignerState {
 public:
  explicit GaussianWignerState(const GaussianStateParams& p);

  /// Coherent state of the oscillator displaced to (q, p); pure.
  static GaussianWignerState coherent(double mass, double omega, double hbar, double q = 0.0, double p = 0.0);
  /// Resting thermal state with m omega^2 sigma_q = sigma_p/m = omega sqrt(D).
  static GaussianWignerState thermal(double mass, double omega, double hbar, double D);

  const GaussianStateParams& params() const { return p_; }
  double determinant() const { return p_.sigma_q * p_.sigma_p - p_.sigma_qp * p_.sigma_qp; }

  /// W(q, p), normalized so that int W dq dp / (2 pi hbar) = 1.
  double wigner(double q, double p) const;
  /// dW/dt = m omega^2 q dW/dp - (p/m) dW/dq.
  double wigner_rate(double q, double p) const;

 private:
  GaussianStateParams p_;
};

/// mu = hbar / (2 sqrt D).
double purity(const GaussianWignerState& s);

/// The B combination of second moments and means that fixes DeltaE and T0.
double moment_combination(const GaussianWignerState& s);

/// DeltaE^2 = B/2 - (hbar omega)^2/4. NegativeVariance if that is negative
/// beyond rounding.
double energy_dispersion(const GaussianWignerState& s);

/// T0 with T0^-2 = hbar (B - 2 D omega^2) / (8 D^(3/2)); +infinity for
/// stationary states.
double stationarity_time(const GaussianWignerState& s);

/// 2 (DeltaE T0 / hbar)^2; +infinity when T0 is.
double stationarity_product(const GaussianWignerState& s);

/// DeltaE T0 >= hbar (2 mu^3)^(-1/2). Not applicable to stationary energy
/// eigenstates (DeltaE = 0 and T0 = infinity).
BoundReport stationarity_bound_check(const GaussianWignerState& s);

/// T0 from a trapezoid rule of (dW/dt)^2 / (2 pi hbar) over a box of
/// half-width `box` standard deviations in q and p, n x n nodes.
double wigner_T0_oracle(const GaussianWignerState& s, std::size_t n = 512, double box = 6.0);

struct PureStateTimes {
  double T0;
  double T1;
  BoundReport eberly_singh;  // DeltaE T1 >= hbar, equality for pure states
};

/// Stationarity times of a pure state: T0 = hbar/(sqrt2 DeltaE), T1 = hbar/DeltaE.
/// ZeroDispersion for DeltaE <= 0.
PureStateTimes pure_state_times(double deltaE, double hbar = 1.0);

struct FockRelaxation {
  double T0;
  double deltaE;
  double product;
};

/// Fock state |M> relaxing into a zero-temperature bath at rate gamma:
/// populations obey dp_n/dt = 2 gamma [(n+1) p_{n+1} - n p_n], and
/// T0^-2 = sum_n (dp_n/dt)^2 at t = 0. DeltaE = 0, so DeltaE T0 = 0.
/// DomainError for M = 0 (stationary) or gamma <= 0.
FockRelaxation fock_relaxation(int M, double gamma);

}  // namespace etu

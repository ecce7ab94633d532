#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "etu/bound_report.hpp"
#include "etu/energy_distribution.hpp"
#include "etu/survival.hpp"

namespace etu {

/// int_0^inf t^k |chi(t)|^m dt, or nullopt when it diverges.
///
/// With a known source distribution the decision is analytic (from the
/// large-time decay of |chi|) and the value comes from adaptive quadrature of
/// the exact amplitude, with whole-period Richardson extrapolation for
/// oscillating power-law tails. Grid-only amplitudes use Simpson's rule and
/// count as divergent when the second half of the grid still contributes more
/// than 1e-3 of the total.
std::optional<double> time_integral(const SurvivalAmplitude& Q, int k, double m, const QuadratureSpec& spec = {});

/// int P^2 dE; nullopt when P is not square integrable (integrable
/// singularity, point masses).
std::optional<double> squared_density_integral(const EnergyDistribution& P, const QuadratureSpec& spec = {});

/// First t with Q(t) = 1/2: grid bracketing, then root refinement on the
/// exact or interpolated amplitude. NoCrossing if Q stays above 1/2.
double half_life(const SurvivalAmplitude& Q);

/// tau0 = int_0^inf Q dt. Divergent when the integral diverges.
double fleming_tau0(const SurvivalAmplitude& Q);
/// tau0 = pi hbar int P^2 dE when that is finite, the time integral
/// otherwise. Divergent when neither converges.
double fleming_tau0(const EnergyDistribution& P);

struct Tau0Routes {
  std::optional<double> spectral;  ///< pi hbar int P^2 dE
  std::optional<double> time;      ///< int_0^inf Q dt
  /// |spectral - time| / spectral, when both exist.
  std::optional<double> relative_difference() const;
};
Tau0Routes tau0_routes(const EnergyDistribution& P, const SurvivalAmplitude& Q);

struct ModifiedTimes {
  double tau_star;
  double deltaE_star;
  double tau_2star;
  double deltaE_2star;
  double tau0;  ///< time route
  /// Relative residuals of tau* = tau**^2/tau0 and DeltaE* = DeltaE**^2 tau0/(pi hbar).
  double tau_residual;
  double energy_residual;
};
/// Equivalent-width times: tau* = [int sqrt Q]^2 / (4 int Q), DeltaE* =
/// int P^2 / max P^2, tau** = int sqrt Q / 2, DeltaE** = 1 / max P.
/// Divergent when a time integral diverges or P has no finite maximum.
ModifiedTimes modified_times(const EnergyDistribution& P, const SurvivalAmplitude& Q);

struct SquaredDensitySpread {
  double mean;     ///< <E> under the weight P^2
  double epsilon;  ///< spread under the weight P^2
};
/// Divergent when P^2 or (E - <E>)^2 P^2 is not integrable.
SquaredDensitySpread squared_density_spread(const EnergyDistribution& P, const QuadratureSpec& spec = {});

struct WignerFormTimes {
  double tau_tilde;  ///< sqrt(int t^2 Q / int Q)
  double epsilon;
  double mean_energy;
  BoundReport bound;  ///< epsilon tau~ >= hbar/2
};
WignerFormTimes wigner_form_times(const EnergyDistribution& P, const SurvivalAmplitude& Q);

struct FujiwaraTimes {
  double tau1;     ///< int t Q / int Q
  double delta1t;  ///< sqrt(tau~^2 - tau1^2)
  double epsilon;
  double product;  ///< epsilon * delta1t
};
FujiwaraTimes fujiwara_times(const SurvivalAmplitude& Q, const EnergyDistribution& P);

/// Length of the shortest energy interval holding probability alpha.
double shortest_interval(const EnergyDistribution& P, double alpha);
/// First t with |chi(t)| = beta. LevelNotReached otherwise.
double amplitude_level_time(const SurvivalAmplitude& Q, double beta);

struct HilgevoordUffink {
  double W_alpha;
  double tau_beta;
  BoundReport bound;  ///< tau_beta W_alpha >= 2 hbar arccos((beta + 1 - alpha)/alpha)
};
/// BoundInapplicable when beta > 2 alpha - 1.
HilgevoordUffink hilgevoord_uffink(const EnergyDistribution& P, double alpha, const SurvivalAmplitude& Q, double beta);

/// Mandelstam-Tamm family for Q with energy spread deltaE:
///   "MT-cosine"   Q(t) >= cos^2(DeltaE t/hbar) on t <= pi hbar/(2 DeltaE)
///   "MT-rate"     |dQ/dt| <= (2 DeltaE/hbar) sqrt(Q (1 - Q))
///   "MT-halflife" T1/2 DeltaE >= pi hbar/4
///   "Fleming"     tau0 DeltaE >= pi hbar/4
///   "Gislason"    tau0 DeltaE >= 3 pi hbar/(5 sqrt5)
/// and, for an exponential law, "ExpWindow": the end of the interval where
/// the rate bound fails against tau ln[1 + hbar^2/(2 tau DeltaE)^2].
/// Reports are guaranteed only when deltaE is at least the true spread of
/// Q's source (or Q has no source); otherwise they are informational.
std::vector<BoundReport> mandelstam_tamm_check(const SurvivalAmplitude& Q, double deltaE);

struct StayTime {
  double tau_W;
  double eps_W;
  double product;
  BoundReport bound;  ///< eps_W tau_W > hbar/2
};
/// Wigner stay time from eta(E) sampled on a grid starting at E = 0:
/// tau_W^2 = hbar^2 int |eta'|^2 / int |eta|^2 (4th-order differences, Simpson)
/// and eps_W^2 = int (E - E0)^2 |eta|^2 / int |eta|^2.
/// NonzeroAtOrigin unless |eta(0)| <= 1e-8 max |eta|.
StayTime wigner_stay_time(const UniformGrid& E, std::span<const std::complex<double>> eta, double E0,
                          double hbar = 1.0);

/// Every decay time and width of a distribution; nullopt marks divergence.
struct DecayTimes {
  std::optional<double> deltaE;
  std::optional<double> t_half;
  std::optional<double> tau0;
  std::optional<double> tau_star;
  std::optional<double> deltaE_star;
  std::optional<double> tau_2star;
  std::optional<double> deltaE_2star;
  std::optional<double> tau_tilde;
  std::optional<double> epsilon;
  std::optional<double> tau1;
  std::optional<double> delta1t;
};
DecayTimes decay_times(const EnergyDistribution& P, const SurvivalAmplitude& Q);

}  // namespace etu

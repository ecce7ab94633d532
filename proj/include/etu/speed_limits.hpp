#pragma once

#include <span>
#include <vector>

#include "etu/bound_report.hpp"
#include "etu/energy_distribution.hpp"
#include "etu/survival.hpp"

namespace etu {

/// Distribution moved so that its lowest energy is zero, with the amplitude
/// on the default time grid. `shift` is the energy added to reach that.
struct SpeedLimitInput {
  EnergyDistribution P;
  SurvivalAmplitude Q;
  double shift;
};

/// NotApplicable for spectra unbounded below.
SpeedLimitInput prepare_speed_limit(const EnergyDistribution& P);

/// First t > 0 with chi(t) = 0. Grid minima of |chi| are refined by Brent
/// minimization and, for sign-changing zeros, by a root of the projection
/// Re[chi(t) conj chi(t - dt)]. A minimum counts as a zero below 1e-6.
/// NotReached otherwise.
double orthogonality_time(const SurvivalAmplitude& Q);

/// First t > 0 with Q(t) = alpha, 0 <= alpha < 1 (alpha = 0 is T_perp).
/// LevelNotReached if Q stays above alpha on the grid.
double level_time(const SurvivalAmplitude& Q, double alpha);

/// <E> T_perp >= pi hbar/2 on the ground-shifted spectrum. Not applicable
/// when the spectrum is unbounded below, <E> diverges or no orthogonal state
/// is reached.
BoundReport margolus_levitin_bound(const EnergyDistribution& P);
BoundReport margolus_levitin_bound(const SpeedLimitInput& in);

/// T_alpha >= pi hbar [(1 - sqrt(alpha (1 + 4p^2/pi^2))) / (2 <E^p>)]^(1/p).
/// POutOfRange unless 0 < p <= (pi/2) sqrt(1/alpha - 1); MomentDivergent if
/// <E^p> is infinite; LevelNotReached from level_time.
BoundReport luo_zhang_bound(const SpeedLimitInput& in, double alpha, double p);
BoundReport luo_zhang_bound(const EnergyDistribution& P, double alpha, double p);

/// The p = 1 case obtained from the cosine inequality: the zero of
/// 1 - 2<E>t/(pi hbar) - sqrt(alpha) max_phi (cos phi - (2/pi) sin phi),
/// with the maximum and the zero found numerically.
double luo_zhang_margolus_route(const SpeedLimitInput& in, double alpha);

/// DeltaE T_perp >= pi hbar/2. Guaranteed when deltaE is at least the
/// source's own DeltaE (or there is no source).
BoundReport mt_orthogonality_bound(const SurvivalAmplitude& Q, double deltaE);

/// Envelope sin(delta0 - h_t) <= |<phi|psi_t>| <= sin(delta0 + h_t) with
/// h_t = dE t/hbar for a constant energy spread dE = min(Delta_phi H,
/// Delta_psi0 H). Angles are clamped to [0, pi/2], so the lower envelope is
/// zero once h_t > delta0 and the upper one is one once delta0 + h_t > pi/2.
/// Returns the worst lower-branch and upper-branch reports.
std::vector<BoundReport> pfeifer_envelope(const UniformGrid& times, std::span<const double> overlap, double delta0,
                                          double dE, double hbar = 1.0);
/// phi = psi0: overlap |chi(t)| and delta0 = pi/2.
std::vector<BoundReport> pfeifer_envelope(const SurvivalAmplitude& Q, double deltaE);

/// For n = 1..n_max:
///   m_2n T^2n / ((2n)! hbar^2n) >= sum_{k<n} (-1)^(n-k+1) m_2k T^2k / ((2k)! hbar^2k)
/// with central moments m and T = T_perp. MomentDivergent when a moment is
/// infinite; NotReached without an orthogonal state.
std::vector<BoundReport> yurtsever_chain(const EnergyDistribution& P, int n_max);
std::vector<BoundReport> yurtsever_chain(const SpeedLimitInput& in, int n_max);

/// cos x - 1 + (2/pi)(x + sin x); non-negative for x >= 0.
double margolus_levitin_kernel(double x);
/// cos x + (2p/pi) sin x - 1 + 2 (x/pi)^p; non-negative for x >= 0.
double luo_zhang_kernel(double x, double p);

}  // namespace etu

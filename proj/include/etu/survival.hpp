#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "etu/bound_report.hpp"
#include "etu/energy_distribution.hpp"
#include "etu/grid.hpp"

namespace etu {

using Complex = std::complex<double>;

/// chi(t) sampled on a uniform grid t_i = i dt, i = 0..n-1, with Q = |chi|^2.
///
/// When built from an EnergyDistribution the distribution is kept, so that
/// off-grid values (root refinement, tail integrals) use the exact amplitude
/// instead of interpolation.
class SurvivalAmplitude {
 public:
  /// Validates the grid (starts at 0, n >= 16), chi(0) = 1 and |chi| <= 1
  /// within 1e-8. Throws DomainError.
  SurvivalAmplitude(UniformGrid times, std::vector<Complex> values, double hbar = 1.0);
  SurvivalAmplitude(const EnergyDistribution& source, UniformGrid times);

  const UniformGrid& times() const noexcept { return times_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  double hbar() const noexcept { return hbar_; }
  std::size_t size() const noexcept { return values_.size(); }
  double t_max() const { return times_.back(); }
  const std::optional<EnergyDistribution>& source() const noexcept { return source_; }

  double Q(std::size_t i) const { return std::norm(values_[i]); }
  std::vector<double> probabilities() const;

  /// chi at any t in [-t_max, t_max]: exact when the source is known,
  /// otherwise 4-point Lagrange interpolation. GridTooShort beyond the grid.
  Complex evaluate(double t) const;
  double probability(double t) const { return std::norm(evaluate(t)); }

 private:
  UniformGrid times_;
  std::vector<Complex> values_;
  double hbar_;
  std::optional<EnergyDistribution> source_;
};

/// chi(t) = int P(E) exp(-iEt/hbar) dE on n points over [0, t_max]. Closed
/// forms for the analytic distributions, a direct trapezoid Fourier sum for
/// sampled ones.
SurvivalAmplitude survival_amplitude(const EnergyDistribution& P, double t_max, std::size_t n);

/// Default grid: t_max = 40 hbar/DeltaE (40 hbar/Gamma for a Lorentzian), 2^14 points.
SurvivalAmplitude survival_amplitude(const EnergyDistribution& P);

/// Q(t) <= (1 + sqrt(Q(2t)))/2 at every grid time whose double is on the
/// grid. Returns the single worst-slack instance; its `at` is that time.
/// GridTooShort if fewer than two times qualify.
std::vector<BoundReport> luo_check(const SurvivalAmplitude& Q, double tolerance = 1e-12);

/// Compares Q on the first ten nonzero grid times with 1 - (t DeltaE/hbar)^2.
/// lhs is the largest |Q - 1 + x^2| / x^2 (x = t DeltaE/hbar), rhs twice the
/// leading-order prediction (1/4 + kurtosis/12) x_max^2.
/// InfiniteVariance when DeltaE diverges.
BoundReport short_time_check(const EnergyDistribution& P, const SurvivalAmplitude& Q);

}  // namespace etu

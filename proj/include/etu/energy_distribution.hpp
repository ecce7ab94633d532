#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "etu/grid.hpp"
#include "etu/quadrature.hpp"

namespace etu {

/// P(E) = (Gamma/2pi) / ((E-E0)^2 + Gamma^2/4); exponential decay law.
struct Lorentzian {
  double E0 = 0.0;
  double Gamma = 1.0;
};

struct GaussianSpec {
  double mean = 0.0;
  double deltaE = 1.0;
};

/// Minimiser of tau0 * DeltaE: (sqrt45/20)(1 - x^2/5)/DeltaE on |x| <= sqrt5,
/// x = (E - center)/DeltaE.
struct TruncatedParabola {
  double deltaE = 1.0;
  double center = 0.0;
};

/// Flat density sqrt3/(6 DeltaE) on |E - center| <= sqrt3 DeltaE.
struct Stepwise {
  double deltaE = 1.0;
  double center = 0.0;
};

/// Energy density of a freely spreading Gaussian packet,
/// (sqrt2 pi e DeltaE)^(-1/2) exp(-e/(sqrt2 DeltaE)), e = E - onset >= 0.
struct Bhattacharyya {
  double deltaE = 1.0;
  double onset = 0.0;
};

/// Point masses w at E1 and 1-w at E2 (kept exact, not sampled).
struct TwoPoint {
  double E1 = 0.0;
  double E2 = 2.0;
  double w = 0.5;
};

/// Densities on a uniform energy grid, linearly interpolated between nodes
/// and zero outside the grid.
struct Sampled {
  UniformGrid grid;
  std::vector<double> values;
};

using DistributionForm = std::variant<Lorentzian, GaussianSpec, TruncatedParabola, Stepwise, Bhattacharyya, TwoPoint, Sampled>;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  bool finite = true;

  double deltaE() const;
};

/// Large-time behaviour of |chi(t)| ~ t^-power. power is +inf for decay
/// faster than any power and NaN when unknown (sampled data). period is set
/// when the tail oscillates with a fixed period.
struct AmplitudeDecay {
  double power;
  std::optional<double> period;
};

/// Normalised, non-negative energy distribution together with the action
/// scale hbar used to turn energies into frequencies. Immutable.
class EnergyDistribution {
 public:
  /// Validates parameters and normalisation (to 1e-8); throws DomainError.
  explicit EnergyDistribution(DistributionForm form, double hbar = 1.0);

  /// Sampled distribution rescaled to unit integral (trapezoid rule).
  static EnergyDistribution normalized_sampled(UniformGrid grid, std::vector<double> values, double hbar = 1.0);

  const DistributionForm& form() const noexcept { return form_; }
  double hbar() const noexcept { return hbar_; }
  std::string_view kind() const noexcept;
  bool has_point_masses() const noexcept { return std::holds_alternative<TwoPoint>(form_); }
  bool is_sampled() const noexcept { return std::holds_alternative<Sampled>(form_); }

  /// Density at E. DomainError for point-mass distributions.
  double density(double E) const;
  double cdf(double E) const;
  /// Smallest E with cdf(E) >= prob, 0 < prob < 1.
  double quantile(double prob) const;
  std::pair<double, double> support() const;
  double min_energy() const { return support().first; }

  Moments moments() const;
  /// <(E - mean)^order>; nullopt when divergent.
  std::optional<double> central_moment(int order, const QuadratureSpec& spec = {}) const;
  /// <|E|^p>; nullopt when divergent.
  std::optional<double> absolute_moment(double p, const QuadratureSpec& spec = {}) const;

  /// <g(E)> under P, including point masses.
  double expectation(const RealFunction& g, const QuadratureSpec& spec = {}) const;
  /// Integral of h(E) over the support of P (no P weight). Used for the
  /// squared-density functionals; sampled forms use the trapezoid rule.
  double integrate_over_support(const RealFunction& h, const QuadratureSpec& spec = {}) const;

  /// max P(E); nullopt if unbounded (integrable singularity or point masses).
  std::optional<double> peak() const;
  double peak_location() const;

  /// chi(t) = int P(E) exp(-i E t/hbar) dE.
  std::complex<double> amplitude(double t) const;
  double survival(double t) const { return std::norm(amplitude(t)); }
  AmplitudeDecay amplitude_decay() const;

  /// DeltaE, or Gamma when the variance is infinite.
  double energy_scale() const;
  double time_scale() const { return hbar_ / energy_scale(); }

  EnergyDistribution shifted(double dE) const;
  /// Energies multiplied by lambda > 0 (density divided by lambda).
  EnergyDistribution scaled(double lambda) const;

 private:
  DistributionForm form_;
  double hbar_;
  // Running trapezoid integral at the nodes of a sampled density.
  std::shared_ptr<const std::vector<double>> cumulative_;
};

}  // namespace etu

#pragma once

#include <string>
#include <vector>

#include "etu/bound_report.hpp"
#include "etu/grid.hpp"
#include "etu/signal.hpp"
#include "etu/survival.hpp"

namespace etu {

/// Left side of the reduced stationarity condition for rho = sqrt(mu):
///   int_0^inf exp(2 rho t - t^2/2) t^(-rho^2 - 1/2) (t - rho) dt.
double mu_equation(double rho);

/// Minimal value of Delta t * Delta omega+ over real signals. Root of
/// mu_equation in rho in [0.5, 0.6], computed once and cached.
double solve_mu();

/// dD_{mu-1/2}/dz at z = -2 sqrt(mu) by a central difference with step h.
/// Vanishes at the minimal mu, which cross-checks solve_mu.
double mu_cross_check(double mu, double h = 1e-5);

/// Lower end of the sandwich, 1/sqrt(12).
double schwartz_lower_bound();

/// Extremal spectrum with its moment constants. For the normalized solution
/// a = 2 int |F'|^2 over omega >= 0, b = N2, c = omega-bar+ and b = 3c^2/2.
struct ExtremalSolution {
  double mu = 0.0;
  double c = 0.0;
  double a = 0.0;
  double b = 0.0;
  UniformGrid half;                 // omega >= 0 nodes
  std::vector<double> half_values;  // normalized F on those nodes
  SignalPair spectrum;              // even extension and its time signal
};

/// F(omega) = D_{mu-1/2}(2 sqrt(mu) (omega/c - 1)) on [0, extent * c] with
/// half_points nodes, mirrored to negative omega and normalized.
SignalPair extremal_spectrum(double mu, double c, std::size_t half_points = 4096, double extent = 8.0);

/// extremal_spectrum at the solved mu, together with a, b and the half grid.
ExtremalSolution extremal_solution(double c = 1.0, std::size_t half_points = 4096, double extent = 8.0);

/// Omega{F} = A N2/N0^2 - A N1^2/N0^3, the squared product for an even real
/// spectrum sampled on omega >= 0 (first node at zero).
double product_functional(const UniformGrid& half, std::span<const double> F);

/// Largest |(b - c^2) F'' - a (omega^2 - 2 c omega + 3 c^2 - 2 b) F| relative
/// to the largest |a (...) F|, over nodes whose stencil stays on omega > 0.
double euler_lagrange_residual(const ExtremalSolution& s);

struct ExtremalTimeSignal {
  UniformGrid t;
  std::vector<double> f;         // f_mu(t) / f_mu(0)
  std::vector<double> gaussian;  // Gaussian with equal omega-bar+, also / its value at 0
  double min_ratio = 0.0;        // min f_mu(t)/f_mu(0), negative
  double gaussian_min_ratio = 0.0;
  double sigma = 0.0;            // Gaussian spectral width sqrt(pi) omega-bar+
};

ExtremalTimeSignal extremal_time_signal(const SignalPair& spectrum);

/// Delta t * Delta omega+ of the Gaussian pair at several widths.
struct GaussianProduct {
  std::vector<double> sigma;
  std::vector<double> product;
  double value = 0.0;   // mean of the products
  double spread = 0.0;  // max - min
  double kay_silverman_rhs = 0.0;
};
GaussianProduct gaussian_product(std::vector<double> sigmas = {0.5, 1.0, 2.0});

/// Delta omega+ Delta t >= |1/2 - |F(0)|^2 omega-bar+| for a sampled pair.
/// The signal is normalized first; the time shift does not change either side.
BoundReport kay_silverman_bound(const SignalPair& s);

/// Survival amplitude of the truncated parabola centred at zero,
/// Q*(t) = 9 (sin z - z cos z)^2 / z^6 with z = sqrt5 t DeltaE / hbar.
SurvivalAmplitude gislason_extremal_Q(double deltaE, const UniformGrid& t, double hbar = 1.0);

/// Products Delta t Delta omega+ that bracket mu, in increasing order:
/// the Schwartz bound, mu, the Gaussian and a truncated parabola spectrum.
struct ProductEntry {
  std::string name;
  double value;
};
std::vector<ProductEntry> ordering_chain();

}  // namespace etu

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "etu/grid.hpp"
#include "etu/quadrature.hpp"

namespace etu {

using Complex = std::complex<double>;

/// Real time signal f(t) and its spectrum
///   F(omega) = (2 pi)^(-1/2) int f(t) exp(-i omega t) dt.
///
/// Discretely the two grids satisfy dt * domega = 2 pi / n and the transform
/// is the corresponding unitary DFT, so round trips and Parseval sums are
/// exact up to rounding.
struct SignalPair {
  UniformGrid t;
  std::vector<double> f;
  UniformGrid omega;
  std::vector<Complex> F;

  /// Throws DomainError unless sum f^2 dt and sum |F|^2 domega are 1 within tol.
  void check_normalized(double tol = 1e-8) const;
};

/// Analytic signal: F+ = sqrt2 F on omega > 0, zero on omega < 0, and
/// F(0)/sqrt2 at omega = 0 (the discrete half weight, which keeps
/// Re f+ = f/sqrt2).
struct AnalyticSignal {
  UniformGrid t;
  std::vector<Complex> f;
  UniformGrid omega;
  std::vector<Complex> F;
  /// |F(0)| is negligible, so the time moments of |f+|^2 equal those of f^2.
  bool zero_dc = false;
};

struct SpreadMoments {
  double mean = 0.0;
  double spread = 0.0;
};

/// Grid of n frequencies centred on zero that pairs with time step dt.
UniformGrid frequency_grid_for(const UniformGrid& t);
/// Grid of n times centred on zero that pairs with frequency step domega.
UniformGrid time_grid_for(const UniformGrid& omega);

/// f from a spectrum sampled on a grid symmetric about omega = 0. F must be
/// Hermitian, F(-omega) = conj F(omega), to 1e-8 of max |f|; DomainError
/// otherwise.
SignalPair signal_from_spectrum(const UniformGrid& omega, std::span<const Complex> F);
SignalPair spectrum_from_signal(const UniformGrid& t, std::span<const double> f);

/// Unitary pair used by the two functions above.
std::vector<Complex> forward_transform(const UniformGrid& t, std::span<const Complex> f, const UniformGrid& omega);
std::vector<Complex> inverse_transform(const UniformGrid& omega, std::span<const Complex> F, const UniformGrid& t);

/// Scaled copy with sum f^2 dt = 1 (and then sum |F|^2 domega = 1).
SignalPair normalized(SignalPair s);

/// t-bar and Delta t of the density |f|^2 (normalised by its own mass).
SpreadMoments time_moments(const UniformGrid& t, std::span<const double> f);
SpreadMoments time_moments(const UniformGrid& t, std::span<const Complex> f);
SpreadMoments time_moments(const SignalPair& s);
/// Full-line omega-bar and Delta omega of |F|^2.
SpreadMoments frequency_moments(const SignalPair& s);
/// omega-bar+ and Delta omega+ over omega >= 0 with the doubled weight.
/// Requires omega = 0 on the grid; uses Simpson's rule from zero.
SpreadMoments positive_frequency_moments(const SignalPair& s);

AnalyticSignal analytic_signal(const SignalPair& s);

/// W = int phi / phi(0) by the trapezoid rule; x = 0 must be a node.
/// ZeroAtOrigin when phi(0) = 0.
double equivalent_width(const UniformGrid& x, std::span<const double> phi);
Complex equivalent_width(const UniformGrid& x, std::span<const Complex> phi);
/// Same for a function on [lo, hi] (limits may be infinite), by quadrature.
double equivalent_width(const RealFunction& phi, double lo, double hi, const QuadratureSpec& spec = {});

/// Half-line integral sum_{omega_k >= 0} w_k g_k with Simpson weights (3/8 on
/// the last three panels when the panel count is odd).
double half_line_integral(const UniformGrid& omega, std::span<const double> g);

}  // namespace etu

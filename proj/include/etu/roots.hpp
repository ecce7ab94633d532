#pragma once

#include "etu/quadrature.hpp"

namespace etu {

struct RootBracket {
  double lo;
  double hi;
  double tol = 1e-10;
};

/// Bracketing root search (TOMS 748, a Brent-class method: bisection safeguards
/// with inverse quadratic/cubic interpolation steps).
///
/// Returns x in [lo, hi] with the final bracket no wider than tol. Throws
/// NoSignChange if f(lo) and f(hi) share a sign, DomainError on a bad bracket.
double find_root(const RealFunction& f, const RootBracket& bracket);

struct Minimum {
  double x;
  double value;
};

/// Derivative-free minimisation of f on [lo, hi] (Brent's golden-section /
/// parabolic method). Locates the minimiser to roughly sqrt(machine epsilon).
Minimum minimize(const RealFunction& f, double lo, double hi);

}  // namespace etu

#pragma once

#include <cstddef>
#include <functional>

namespace etu {

using RealFunction = std::function<double(double)>;

/// Change of variables used for a semi-infinite range [a, inf).
enum class TailMap {
  rational,  ///< x = a + u/(1-u), u in [0, 1)
};

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  std::size_t max_subdivisions = std::size_t{1} << 20;
  TailMap tail_map = TailMap::rational;

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_subdivisions >= 8.
  void validate() const;

  QuadratureSpec tightened(double factor) const {
    QuadratureSpec s = *this;
    s.abs_tol *= factor;
    s.rel_tol *= factor;
    return s;
  }
};

/// Adaptive Simpson quadrature of f over [a, b].
///
/// Either limit may be infinite; an infinite range is mapped onto a finite one
/// with spec.tail_map (a doubly infinite range is split at zero). Non-finite
/// integrand values at an interval endpoint are treated as zero, so integrable
/// endpoint behaviour that decays to zero under the map is harmless; true
/// singularities should be removed by a substitution before calling.
///
/// Throws DomainError if a >= b and NonConvergence if the requested tolerance
/// max(abs_tol, rel_tol * |result|) is not met within spec.max_subdivisions.
double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec = {});

/// Integral over [a, inf) of an integrand whose tail decays like a power law
/// with oscillations of fixed period, e.g. sin^2(x)/x^2.
///
/// The range is cut into whole periods, the truncated integrals I(T) are
/// evaluated at T = a + n*period for n = n0, 2 n0, ..., and the truncation
/// error, assumed to expand as c_q T^-q + c_{q+1} T^-(q+1) + ..., is removed
/// by Richardson extrapolation. leading_power is q (> 0).
double integrate_periodic_tail(const RealFunction& f, double a, double period, double leading_power,
                               const QuadratureSpec& spec = {});

}  // namespace etu

#include "etu/parabolic_cylinder.hpp"

#include <cmath>
#include <limits>

#include "etu/error.hpp"

namespace etu {

namespace {

void check_domain(double nu, double z) {
  if (!(nu > -1.0 && nu < 0.0)) raise(Errc::domain_error, "parabolic_cylinder_d supports -1 < nu < 0 only");
  if (!std::isfinite(z)) raise(Errc::domain_error, "parabolic_cylinder_d requires finite z");
}

// int_0^inf exp(shift - z t - t^2/2) t^(-nu-1) t^extra_power dt after the
// s-substitution. For z > 0 the Gaussian prefactor exp(-z^2/4) is kept out of
// the integrand (shift = 0) so that large-z values retain relative accuracy.
double reduced_integral(double nu, double z, double shift, int extra_power, const QuadratureSpec& spec) {
  const double k = -1.0 / nu;
  auto integrand = [=](double s) {
    if (s <= 0.0) return extra_power == 0 ? k * std::exp(shift) : 0.0;
    const double t = std::pow(s, k);
    const double e = shift - z * t - 0.5 * t * t;
    const double value = k * std::exp(e);
    return extra_power == 0 ? value : value * t;
  };
  return integrate(integrand, 0.0, std::numeric_limits<double>::infinity(), spec);
}

}  // namespace

double parabolic_cylinder_d(double nu, double z, const QuadratureSpec& spec) {
  check_domain(nu, z);
  const double quarter = 0.25 * z * z;
  if (z > 0.0) {
    return std::exp(-quarter) * reduced_integral(nu, z, 0.0, 0, spec) / std::tgamma(-nu);
  }
  return reduced_integral(nu, z, -quarter, 0, spec) / std::tgamma(-nu);
}

double parabolic_cylinder_d_derivative(double nu, double z, const QuadratureSpec& spec) {
  check_domain(nu, z);
  const double quarter = 0.25 * z * z;
  const double g = std::tgamma(-nu);
  if (z > 0.0) {
    const double scale = std::exp(-quarter);
    const double d = scale * reduced_integral(nu, z, 0.0, 0, spec) / g;
    return -0.5 * z * d - scale * reduced_integral(nu, z, 0.0, 1, spec) / g;
  }
  const double d = reduced_integral(nu, z, -quarter, 0, spec) / g;
  return -0.5 * z * d - reduced_integral(nu, z, -quarter, 1, spec) / g;
}

}  // namespace etu

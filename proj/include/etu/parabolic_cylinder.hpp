#pragma once

#include "etu/quadrature.hpp"

namespace etu {

/// Parabolic cylinder function D_nu(z) for -1 < nu < 0, from
///
///   D_nu(z) = 1/Gamma(-nu) * int_0^inf exp(-z^2/4 - z t - t^2/2) t^(-nu-1) dt.
///
/// The t^(-nu-1) endpoint singularity is removed with t = s^(1/(-nu)), after
/// which the integrand is smooth and the semi-infinite range goes through the
/// quadrature tail map. Throws DomainError outside -1 < nu < 0 or for
/// non-finite z.
double parabolic_cylinder_d(double nu, double z, const QuadratureSpec& spec = {});

/// dD_nu/dz obtained by differentiating the integral representation under the
/// integral sign: -z/2 D_nu(z) - 1/Gamma(-nu) int exp(...) t^(-nu) dt.
double parabolic_cylinder_d_derivative(double nu, double z, const QuadratureSpec& spec = {});

}  // namespace etu

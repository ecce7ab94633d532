#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference in etu::kernels::serial and an OpenMP version in
// etu::kernels::parallel. The two must agree to rounding; tests hold them to
// that and bench/ compares their throughput. Unqualified etu::kernels::*
// calls go to the parallel versions.

#include <complex>
#include <functional>
#include <span>

#include "etu/grid.hpp"
#include "etu/quadrature.hpp"

namespace etu::kernels {

using Complex = std::complex<double>;
using PhaseSpaceFunction = std::function<double(double, double)>;

enum class EndWeights { none, trapezoid };

namespace serial {

/// out[k] = sum_j w_j in[j] exp(i * sign * y_k * x_j) with w_j = 1, or 1/2 at
/// both ends for EndWeights::trapezoid. No step factor is applied.
void fourier_sum(const UniformGrid& x, std::span<const Complex> in, const UniformGrid& y, double sign,
                 EndWeights ends, std::span<Complex> out);

/// out[i] = f(xs[i]); f must be safe to call concurrently.
void tabulate(const RealFunction& f, std::span<const double> xs, std::span<double> out);

/// 2-D trapezoid rule of f(q, p) over the tensor grid q x p.
double phase_space_trapezoid(const PhaseSpaceFunction& f, const UniformGrid& q, const UniformGrid& p);

}  // namespace serial

namespace parallel {

void fourier_sum(const UniformGrid& x, std::span<const Complex> in, const UniformGrid& y, double sign,
                 EndWeights ends, std::span<Complex> out);
void tabulate(const RealFunction& f, std::span<const double> xs, std::span<double> out);
double phase_space_trapezoid(const PhaseSpaceFunction& f, const UniformGrid& q, const UniformGrid& p);

}  // namespace parallel

using parallel::fourier_sum;
using parallel::phase_space_trapezoid;
using parallel::tabulate;

}  // namespace etu::kernels

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "etu/error.hpp"
#include "etu/kernels.hpp"

namespace etu::kernels::detail {

inline void check_sizes(std::size_t expected, std::size_t actual, const char* what) {
  if (expected != actual) raise(Errc::domain_error, what);
}

// One output of the direct Fourier sum. The phase advances by a fixed
// rotation and is re-anchored from std::polar every 32 nodes to bound drift.
inline Complex fourier_row(const UniformGrid& x, std::span<const Complex> in, double omega, EndWeights ends) {
  constexpr std::size_t anchor = 32;
  const Complex rotation = std::polar(1.0, omega * x.step);
  Complex phase{};
  Complex acc{};
  for (std::size_t j = 0; j < x.size; ++j) {
    if (j % anchor == 0) phase = std::polar(1.0, omega * x.at(j));
    Complex term = in[j] * phase;
    if (ends == EndWeights::trapezoid && (j == 0 || j + 1 == x.size)) term *= 0.5;
    acc += term;
    phase *= rotation;
  }
  return acc;
}

inline double row_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

// Trapezoid over p at fixed q; each row is summed serially so the parallel
// version reproduces the serial result bit for bit.
inline double phase_space_row(const PhaseSpaceFunction& f, double q, const UniformGrid& p) {
  double acc = 0.0;
  for (std::size_t j = 0; j < p.size; ++j) acc += row_weight(j, p.size) * f(q, p.at(j));
  return acc;
}

inline double combine_rows(const std::vector<double>& rows, const UniformGrid& q, const UniformGrid& p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) acc += row_weight(i, rows.size()) * rows[i];
  return acc * q.step * p.step;
}

}  // namespace etu::kernels::detail

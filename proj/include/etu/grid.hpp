#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace etu {

/// x_i = start + i * step, i = 0 .. size-1.
struct UniformGrid {
  double start = 0.0;
  double step = 1.0;
  std::size_t size = 0;

  double at(std::size_t i) const { return start + static_cast<double>(i) * step; }
  double back() const { return at(size - 1); }

  static UniformGrid from_range(double lo, double hi, std::size_t n) {
    return {lo, (hi - lo) / static_cast<double>(n - 1), n};
  }

  /// Grid of n points symmetric about zero: x_i = (i - (n-1)/2) * step.
  static UniformGrid centered(double step, std::size_t n) {
    return {-0.5 * static_cast<double>(n - 1) * step, step, n};
  }

  /// Index of the grid point at x, or size if x is not (to 1e-9 steps) a node.
  std::size_t index_of(double x) const {
    const double r = (x - start) / step;
    const double k = std::round(r);
    if (std::abs(r - k) > 1e-9 || k < 0.0 || k >= static_cast<double>(size)) return size;
    return static_cast<std::size_t>(k);
  }

  std::vector<double> nodes() const {
    std::vector<double> xs(size);
    for (std::size_t i = 0; i < size; ++i) xs[i] = at(i);
    return xs;
  }
};

}  // namespace etu

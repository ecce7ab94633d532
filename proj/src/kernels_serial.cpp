#include "kernels_detail.hpp"

namespace etu::kernels::serial {

void fourier_sum(const UniformGrid& x, std::span<const Complex> in, const UniformGrid& y, double sign,
                 EndWeights ends, std::span<Complex> out) {
  detail::check_sizes(x.size, in.size(), "fourier_sum: input size does not match grid");
  detail::check_sizes(y.size, out.size(), "fourier_sum: output size does not match grid");
  for (std::size_t k = 0; k < y.size; ++k) out[k] = detail::fourier_row(x, in, sign * y.at(k), ends);
}

void tabulate(const RealFunction& f, std::span<const double> xs, std::span<double> out) {
  detail::check_sizes(xs.size(), out.size(), "tabulate: size mismatch");
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
}

double phase_space_trapezoid(const PhaseSpaceFunction& f, const UniformGrid& q, const UniformGrid& p) {
  std::vector<double> rows(q.size);
  for (std::size_t i = 0; i < q.size; ++i) rows[i] = detail::phase_space_row(f, q.at(i), p);
  return detail::combine_rows(rows, q, p);
}

}  // namespace etu::kernels::serial

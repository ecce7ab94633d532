#include <omp.h>

#include <exception>

#include "kernels_detail.hpp"

namespace etu::kernels::parallel {

namespace {

// Exceptions may not cross an OpenMP region boundary; the first one thrown by
// any iteration is kept and rethrown on the calling thread.
class FirstError {
 public:
  template <class Body>
  void run(Body&& body) noexcept {
    try {
      body();
    } catch (...) {
#pragma omp critical(etu_kernel_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

void fourier_sum(const UniformGrid& x, std::span<const Complex> in, const UniformGrid& y, double sign,
                 EndWeights ends, std::span<Complex> out) {
  detail::check_sizes(x.size, in.size(), "fourier_sum: input size does not match grid");
  detail::check_sizes(y.size, out.size(), "fourier_sum: output size does not match grid");
  const auto n = static_cast<std::ptrdiff_t>(y.size);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[k] = detail::fourier_row(x, in, sign * y.at(static_cast<std::size_t>(k)), ends);
  }
}

void tabulate(const RealFunction& f, std::span<const double> xs, std::span<double> out) {
  detail::check_sizes(xs.size(), out.size(), "tabulate: size mismatch");
  const auto n = static_cast<std::ptrdiff_t>(xs.size());
  FirstError error;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    error.run([&] { out[i] = f(xs[i]); });
  }
  error.rethrow();
}

double phase_space_trapezoid(const PhaseSpaceFunction& f, const UniformGrid& q, const UniformGrid& p) {
  std::vector<double> rows(q.size);
  const auto n = static_cast<std::ptrdiff_t>(q.size);
  FirstError error;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    error.run([&] { rows[i] = detail::phase_space_row(f, q.at(static_cast<std::size_t>(i)), p); });
  }
  error.rethrow();
  return detail::combine_rows(rows, q, p);
}

}  // namespace etu::kernels::parallel

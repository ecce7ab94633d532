#include "etu/roots.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>

#include "etu/error.hpp"

namespace etu {

double find_root(const RealFunction& f, const RootBracket& bracket) {
  if (!(bracket.lo < bracket.hi)) raise(Errc::domain_error, "root bracket requires lo < hi");
  if (!(bracket.tol > 0.0)) raise(Errc::domain_error, "root tolerance must be positive");
  const double flo = f(bracket.lo);
  const double fhi = f(bracket.hi);
  if (flo == 0.0) return bracket.lo;
  if (fhi == 0.0) return bracket.hi;
  if (!(std::isfinite(flo) && std::isfinite(fhi)) || (flo > 0.0) == (fhi > 0.0)) {
    raise(Errc::no_sign_change, "function does not change sign on the bracket");
  }
  const double tol = bracket.tol;
  auto done = [tol](double a, double b) { return std::abs(b - a) <= tol; };
  std::uintmax_t max_iter = 500;
  const auto [a, b] = boost::math::tools::toms748_solve(f, bracket.lo, bracket.hi, flo, fhi, done, max_iter);
  if (!done(a, b)) raise(Errc::non_convergence, "root bracket did not shrink to tolerance");
  return std::clamp(0.5 * (a + b), bracket.lo, bracket.hi);
}

Minimum minimize(const RealFunction& f, double lo, double hi) {
  if (!(lo < hi)) raise(Errc::domain_error, "minimisation interval requires lo < hi");
  constexpr int bits = std::numeric_limits<double>::digits / 2;
  std::uintmax_t max_iter = 500;
  const auto [x, fx] = boost::math::tools::brent_find_minima(f, lo, hi, bits, max_iter);
  return {x, fx};
}

}  // namespace etu

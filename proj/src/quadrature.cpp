#include "etu/quadrature.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "etu/error.hpp"

namespace etu {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) raise(Errc::domain_error, "quadrature tolerances must be positive");
  if (max_subdivisions < 8) raise(Errc::domain_error, "max_subdivisions must be at least 8");
}

namespace {

double finite_or_zero(double v) { return std::isfinite(v) ? v : 0.0; }

// Neumaier-compensated accumulator; keeps long sums of small panel
// contributions accurate and order-deterministic.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

struct Panel {
  double a, b;
  double fa, fm, fb;
  double whole;
  int depth;
};

double simpson(double a, double b, double fa, double fm, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive_simpson(const RealFunction& f, double a, double b, const QuadratureSpec& spec) {
  constexpr int initial_panels = 16;
  constexpr int min_depth = 2;
  constexpr int max_depth = 60;

  const double width = b - a;
  std::vector<Panel> stack;
  stack.reserve(256);

  // Coarse pass: seeds the panel stack and gives the magnitude used by the
  // relative tolerance.
  std::vector<double> nodes(2 * initial_panels + 1);
  for (int i = 0; i <= 2 * initial_panels; ++i) {
    const double x = i == 2 * initial_panels ? b : a + width * i / (2.0 * initial_panels);
    nodes[i] = finite_or_zero(f(x));
  }
  double coarse = 0.0;
  for (int p = initial_panels - 1; p >= 0; --p) {
    const double pa = a + width * p / initial_panels;
    const double pb = p + 1 == initial_panels ? b : a + width * (p + 1) / initial_panels;
    const double s = simpson(pa, pb, nodes[2 * p], nodes[2 * p + 1], nodes[2 * p + 2]);
    coarse += s;
    stack.push_back({pa, pb, nodes[2 * p], nodes[2 * p + 1], nodes[2 * p + 2], s, 0});
  }

  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(coarse));
  Accumulator total;
  std::size_t subdivisions = 0;
  bool unresolved = false;

  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();
    const double m = 0.5 * (p.a + p.b);
    const double lm = finite_or_zero(f(0.5 * (p.a + m)));
    const double rm = finite_or_zero(f(0.5 * (m + p.b)));
    const double left = simpson(p.a, m, p.fa, lm, p.fm);
    const double right = simpson(m, p.b, p.fm, rm, p.fb);
    const double diff = left + right - p.whole;
    const double local_tol = tol * (p.b - p.a) / width;

    if (p.depth >= min_depth && std::abs(diff) <= 15.0 * local_tol) {
      total.add(left + right + diff / 15.0);
      continue;
    }
    if (p.depth >= max_depth || !(m > p.a && m < p.b)) {
      total.add(left + right + diff / 15.0);
      unresolved = true;
      continue;
    }
    if (++subdivisions > spec.max_subdivisions) {
      raise(Errc::non_convergence, "adaptive Simpson exceeded max_subdivisions");
    }
    stack.push_back({m, p.b, p.fm, rm, p.fb, right, p.depth + 1});
    stack.push_back({p.a, m, p.fa, lm, p.fm, left, p.depth + 1});
  }

  if (unresolved) raise(Errc::non_convergence, "integrand not resolved at machine precision");
  const double result = total.value();
  return result;
}

double upper_tail(const RealFunction& f, double a, const QuadratureSpec& spec) {
  switch (spec.tail_map) {
    case TailMap::rational: {
      auto g = [&](double u) {
        if (u >= 1.0) return 0.0;
        const double one_minus = 1.0 - u;
        const double x = a + u / one_minus;
        return f(x) / (one_minus * one_minus);
      };
      return adaptive_simpson(g, 0.0, 1.0, spec);
    }
  }
  return 0.0;
}

}  // namespace

double integrate(const RealFunction& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (std::isnan(a) || std::isnan(b) || !(a < b)) raise(Errc::domain_error, "integration limits require a < b");
  const bool a_inf = std::isinf(a);
  const bool b_inf = std::isinf(b);
  if (!a_inf && !b_inf) return adaptive_simpson(f, a, b, spec);
  if (!a_inf && b_inf) return upper_tail(f, a, spec);
  auto reflected = [&](double x) { return f(-x); };
  if (a_inf && !b_inf) return upper_tail(reflected, -b, spec);
  return upper_tail(reflected, 0.0, spec) + upper_tail(f, 0.0, spec);
}

double integrate_periodic_tail(const RealFunction& f, double a, double period, double leading_power,
                               const QuadratureSpec& spec) {
  spec.validate();
  if (!(period > 0.0) || !(leading_power > 0.0)) raise(Errc::domain_error, "period and leading power must be positive");

  constexpr int first_periods = 32;
  constexpr int levels = 6;  // truncations at 32, 64, ..., 1024 periods
  constexpr int corrections = 3;

  QuadratureSpec block_spec = spec;
  block_spec.abs_tol = spec.abs_tol / (first_periods << (levels - 1));

  std::vector<double> truncated(levels);
  Accumulator running;
  int done = 0;
  for (int level = 0; level < levels; ++level) {
    const int target = first_periods << level;
    for (; done < target; ++done) {
      running.add(adaptive_simpson(f, a + done * period, a + (done + 1) * period, block_spec));
    }
    truncated[level] = running.value();
  }

  // Richardson table with doubling ratio; column j removes T^-(q+j).
  std::vector<double> row = truncated;
  for (int j = 0; j < corrections; ++j) {
    const double factor = std::pow(2.0, leading_power + j);
    for (std::size_t i = row.size() - 1; i > static_cast<std::size_t>(j); --i) {
      row[i] = (factor * row[i] - row[i - 1]) / (factor - 1.0);
    }
  }
  const double best = row.back();
  const double previous = row[row.size() - 2];
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(best));
  if (std::abs(best - previous) > 1e4 * tol) {
    raise(Errc::non_convergence, "periodic tail extrapolation did not settle");
  }
  return best;
}

}  // namespace etu

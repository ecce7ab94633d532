#include "etu/survival.hpp"

#include <algorithm>
#include <cmath>

#include "etu/error.hpp"
#include "etu/kernels.hpp"

namespace etu {

namespace {

void check_time_grid(const UniformGrid& g) {
  if (g.size < 16) raise(Errc::domain_error, "time grid needs at least 16 points");
  if (g.start != 0.0) raise(Errc::domain_error, "time grid must start at t = 0");
  if (!(g.step > 0.0) || !std::isfinite(g.step)) raise(Errc::domain_error, "time step must be positive");
}

void check_amplitudes(const std::vector<Complex>& v) {
  if (std::abs(v.front() - Complex(1.0)) > 1e-8) raise(Errc::domain_error, "chi(0) must equal 1");
  for (const Complex& c : v)
    if (!(std::abs(c) <= 1.0 + 1e-8)) raise(Errc::domain_error, "|chi(t)| must not exceed 1");
}

}  // namespace

SurvivalAmplitude::SurvivalAmplitude(UniformGrid times, std::vector<Complex> values, double hbar)
    : times_(times), values_(std::move(values)), hbar_(hbar) {
  check_time_grid(times_);
  if (values_.size() != times_.size) raise(Errc::domain_error, "amplitude count does not match the time grid");
  if (!(hbar_ > 0.0)) raise(Errc::domain_error, "hbar must be positive");
  check_amplitudes(values_);
}

SurvivalAmplitude::SurvivalAmplitude(const EnergyDistribution& source, UniformGrid times)
    : times_(times), hbar_(source.hbar()), source_(source) {
  check_time_grid(times_);
  values_.resize(times_.size);
  if (const auto* s = std::get_if<Sampled>(&source.form())) {
    std::vector<Complex> p(s->values.begin(), s->values.end());
    UniformGrid y{0.0, times_.step / hbar_, times_.size};
    kernels::fourier_sum(s->grid, p, y, -1.0, kernels::EndWeights::trapezoid, values_);
    for (Complex& c : values_) c *= s->grid.step;
  } else {
    for (std::size_t i = 0; i < times_.size; ++i) values_[i] = source.amplitude(times_.at(i));
  }
  check_amplitudes(values_);
}

std::vector<double> SurvivalAmplitude::probabilities() const {
  std::vector<double> q(values_.size());
  std::transform(values_.begin(), values_.end(), q.begin(), [](Complex c) { return std::norm(c); });
  return q;
}

Complex SurvivalAmplitude::evaluate(double t) const {
  if (t < 0.0) return std::conj(evaluate(-t));
  if (source_) return source_->amplitude(t);
  const double r = t / times_.step;
  const double last = static_cast<double>(times_.size - 1);
  if (r > last * (1.0 + 1e-12)) raise(Errc::grid_too_short, "time beyond the amplitude grid");
  // 4-point Lagrange stencil, shifted inwards at the ends; chi(-t) = conj
  // chi(t) supplies the node left of t = 0.
  const auto n = static_cast<long>(times_.size);
  long i0 = static_cast<long>(std::floor(r)) - 1;
  i0 = std::min(i0, n - 4);
  auto node = [&](long k) { return k < 0 ? std::conj(values_[static_cast<std::size_t>(-k)]) : values_[static_cast<std::size_t>(k)]; };
  Complex sum = 0.0;
  for (long j = 0; j < 4; ++j) {
    double w = 1.0;
    for (long m = 0; m < 4; ++m)
      if (m != j) w *= (r - static_cast<double>(i0 + m)) / static_cast<double>(j - m);
    sum += w * node(i0 + j);
  }
  return sum;
}

SurvivalAmplitude survival_amplitude(const EnergyDistribution& P, double t_max, std::size_t n) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) raise(Errc::domain_error, "t_max must be positive");
  if (n < 16) raise(Errc::domain_error, "time grid needs at least 16 points");
  return SurvivalAmplitude(P, UniformGrid::from_range(0.0, t_max, n));
}

SurvivalAmplitude survival_amplitude(const EnergyDistribution& P) {
  return survival_amplitude(P, 40.0 * P.time_scale(), std::size_t{1} << 14);
}

std::vector<BoundReport> luo_check(const SurvivalAmplitude& Q, double tolerance) {
  const std::size_t half = (Q.size() - 1) / 2;
  if (half < 2) raise(Errc::grid_too_short, "grid too short for the doubled time");
  double worst = std::numeric_limits<double>::infinity();
  std::size_t at = 0;
  for (std::size_t i = 1; i <= half; ++i) {
    const double slack = 0.5 * (1.0 + std::sqrt(Q.Q(2 * i))) - Q.Q(i);
    if (slack < worst) {
      worst = slack;
      at = i;
    }
  }
  BoundReport r = make_bound("Luo", "", Q.Q(at), Relation::leq, 0.5 * (1.0 + std::sqrt(Q.Q(2 * at))),
                             "Luo inequality Q(t) <= [1 + sqrt Q(2t)]/2", tolerance);
  r.at = Q.times().at(at);
  r.note = "worst case over " + std::to_string(half) + " grid times";
  return {r};
}

BoundReport short_time_check(const EnergyDistribution& P, const SurvivalAmplitude& Q) {
  const Moments m = P.moments();
  if (!m.finite) raise(Errc::infinite_variance, "short-time expansion needs a finite energy variance");
  const double dE = std::sqrt(m.variance);
  if (!(dE > 0.0)) raise(Errc::zero_dispersion, "short-time expansion needs DeltaE > 0");
  const auto m4 = P.central_moment(4);
  const double kurtosis = m4 ? *m4 / (m.variance * m.variance) : 3.0;
  const std::size_t count = std::min<std::size_t>(10, Q.size() - 1);
  double worst = 0.0;
  double x_max = 0.0;
  for (std::size_t i = 1; i <= count; ++i) {
    const double x = Q.times().at(i) * dE / Q.hbar();
    worst = std::max(worst, std::abs(Q.Q(i) - 1.0 + x * x) / (x * x));
    x_max = x;
  }
  const double predicted = (0.25 + kurtosis / 12.0) * x_max * x_max;
  BoundReport r = make_bound("ShortTime", std::string(P.kind()), worst, Relation::leq, 2.0 * predicted + 1e-12,
                             "short-time expansion Q = 1 - (t DeltaE/hbar)^2 + O(t^4)", 0.0);
  r.at = Q.times().at(count);
  return r;
}

}  // namespace etu

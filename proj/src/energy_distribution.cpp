#include "etu/energy_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "etu/error.hpp"
#include "etu/roots.hpp"

namespace etu {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();
const double sqrt3 = std::sqrt(3.0);
const double sqrt5 = std::sqrt(5.0);

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) raise(Errc::domain_error, std::string(what) + " must be positive and finite");
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) raise(Errc::domain_error, std::string(what) + " must be finite");
}

double trapezoid_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

// 3 (sin z - z cos z) / z^3, the Fourier transform of the normalised parabola.
double parabola_kernel(double z) {
  const double z2 = z * z;
  if (std::abs(z) < 0.05) return 1.0 - z2 / 10.0 + z2 * z2 / 280.0 - z2 * z2 * z2 / 15120.0;
  return 3.0 * (std::sin(z) - z * std::cos(z)) / (z2 * z);
}

double sinc(double z) {
  if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0;
  return std::sin(z) / z;
}

std::vector<double> cumulative_trapezoid(const Sampled& s) {
  std::vector<double> c(s.values.size(), 0.0);
  for (std::size_t i = 1; i < c.size(); ++i) c[i] = c[i - 1] + 0.5 * s.grid.step * (s.values[i - 1] + s.values[i]);
  return c;
}

double sampled_density(const Sampled& s, double E) {
  const double r = (E - s.grid.start) / s.grid.step;
  const double last = static_cast<double>(s.grid.size - 1);
  if (!(r >= 0.0) || r > last) return 0.0;
  const auto i = std::min(static_cast<std::size_t>(r), s.grid.size - 2);
  const double f = r - static_cast<double>(i);
  return (1.0 - f) * s.values[i] + f * s.values[i + 1];
}

void validate(const DistributionForm& form) {
  std::visit(overloaded{
                 [](const Lorentzian& d) {
                   require_finite(d.E0, "E0");
                   require_positive(d.Gamma, "Gamma");
                 },
                 [](const GaussianSpec& d) {
                   require_finite(d.mean, "mean");
                   require_positive(d.deltaE, "deltaE");
                 },
                 [](const TruncatedParabola& d) {
                   require_finite(d.center, "center");
                   require_positive(d.deltaE, "deltaE");
                 },
                 [](const Stepwise& d) {
                   require_finite(d.center, "center");
                   require_positive(d.deltaE, "deltaE");
                 },
                 [](const Bhattacharyya& d) {
                   require_finite(d.onset, "onset");
                   require_positive(d.deltaE, "deltaE");
                 },
                 [](const TwoPoint& d) {
                   require_finite(d.E1, "E1");
                   require_finite(d.E2, "E2");
                   if (!(d.w >= 0.0 && d.w <= 1.0)) raise(Errc::domain_error, "two-point weight must lie in [0, 1]");
                 },
                 [](const Sampled& d) {
                   if (d.grid.size < 3 || d.values.size() != d.grid.size)
                     raise(Errc::domain_error, "sampled density needs at least 3 values matching the grid");
                   require_positive(d.grid.step, "grid step");
                   require_finite(d.grid.start, "grid start");
                   for (double v : d.values)
                     if (!(v >= 0.0) || !std::isfinite(v)) raise(Errc::domain_error, "densities must be finite and >= 0");
                   const double norm = cumulative_trapezoid(d).back();
                   if (std::abs(norm - 1.0) > 1e-8)
                     raise(Errc::domain_error, "sampled density integrates to " + std::to_string(norm) + ", not 1");
                 },
             },
             form);
}

}  // namespace

double Moments::deltaE() const { return finite ? std::sqrt(variance) : inf; }

EnergyDistribution::EnergyDistribution(DistributionForm form, double hbar) : form_(std::move(form)), hbar_(hbar) {
  require_positive(hbar_, "hbar");
  validate(form_);
  if (const auto* s = std::get_if<Sampled>(&form_))
    cumulative_ = std::make_shared<const std::vector<double>>(cumulative_trapezoid(*s));
}

EnergyDistribution EnergyDistribution::normalized_sampled(UniformGrid grid, std::vector<double> values, double hbar) {
  Sampled s{grid, std::move(values)};
  if (s.grid.size < 3 || s.values.size() != s.grid.size)
    raise(Errc::domain_error, "sampled density needs at least 3 values matching the grid");
  const double norm = cumulative_trapezoid(s).back();
  if (!(norm > 0.0) || !std::isfinite(norm)) raise(Errc::domain_error, "sampled density has no positive mass");
  for (double& v : s.values) v /= norm;
  return EnergyDistribution(std::move(s), hbar);
}

std::string_view EnergyDistribution::kind() const noexcept {
  return std::visit(overloaded{
                        [](const Lorentzian&) { return std::string_view("lorentzian"); },
                        [](const GaussianSpec&) { return std::string_view("gaussian"); },
                        [](const TruncatedParabola&) { return std::string_view("truncated-parabola"); },
                        [](const Stepwise&) { return std::string_view("stepwise"); },
                        [](const Bhattacharyya&) { return std::string_view("bhattacharyya"); },
                        [](const TwoPoint&) { return std::string_view("two-point"); },
                        [](const Sampled&) { return std::string_view("sampled"); },
                    },
                    form_);
}

double EnergyDistribution::density(double E) const {
  return std::visit(overloaded{
                        [&](const Lorentzian& d) {
                          const double x = E - d.E0;
                          return d.Gamma / (2.0 * pi) / (x * x + 0.25 * d.Gamma * d.Gamma);
                        },
                        [&](const GaussianSpec& d) {
                          const double x = (E - d.mean) / d.deltaE;
                          return std::exp(-0.5 * x * x) / (std::sqrt(2.0 * pi) * d.deltaE);
                        },
                        [&](const TruncatedParabola& d) {
                          const double x = (E - d.center) / d.deltaE;
                          if (std::abs(x) > sqrt5) return 0.0;
                          return std::sqrt(45.0) / 20.0 * (1.0 - x * x / 5.0) / d.deltaE;
                        },
                        [&](const Stepwise& d) {
                          const double x = (E - d.center) / d.deltaE;
                          return std::abs(x) > sqrt3 ? 0.0 : sqrt3 / (6.0 * d.deltaE);
                        },
                        [&](const Bhattacharyya& d) {
                          const double e = E - d.onset;
                          if (!(e > 0.0)) return 0.0;
                          const double theta = std::sqrt(2.0) * d.deltaE;
                          return std::exp(-e / theta) / std::sqrt(pi * theta * e);
                        },
                        [&](const TwoPoint&) -> double {
                          raise(Errc::domain_error, "two-point distribution has no density");
                        },
                        [&](const Sampled& d) { return sampled_density(d, E); },
                    },
                    form_);
}

double EnergyDistribution::cdf(double E) const {
  return std::visit(overloaded{
                        [&](const Lorentzian& d) { return 0.5 + std::atan(2.0 * (E - d.E0) / d.Gamma) / pi; },
                        [&](const GaussianSpec& d) {
                          return 0.5 * std::erfc(-(E - d.mean) / (std::sqrt(2.0) * d.deltaE));
                        },
                        [&](const TruncatedParabola& d) {
                          const double x = std::clamp((E - d.center) / d.deltaE, -sqrt5, sqrt5);
                          return std::sqrt(45.0) / 20.0 * ((x + sqrt5) - (x * x * x + 5.0 * sqrt5) / 15.0);
                        },
                        [&](const Stepwise& d) {
                          const double x = std::clamp((E - d.center) / d.deltaE, -sqrt3, sqrt3);
                          return (x + sqrt3) / (2.0 * sqrt3);
                        },
                        [&](const Bhattacharyya& d) {
                          const double e = E - d.onset;
                          return e > 0.0 ? std::erf(std::sqrt(e / (std::sqrt(2.0) * d.deltaE))) : 0.0;
                        },
                        [&](const TwoPoint& d) { return (E >= d.E1 ? d.w : 0.0) + (E >= d.E2 ? 1.0 - d.w : 0.0); },
                        [&](const Sampled& d) {
                          const double r = (E - d.grid.start) / d.grid.step;
                          if (!(r > 0.0)) return 0.0;
                          if (r >= static_cast<double>(d.grid.size - 1)) return cumulative_->back();
                          const auto i = static_cast<std::size_t>(r);
                          const double f = r - static_cast<double>(i);
                          // exact integral of the linear interpolant over the partial cell
                          const double p0 = d.values[i];
                          const double p1 = d.values[i + 1];
                          return (*cumulative_)[i] + d.grid.step * (p0 * f + 0.5 * (p1 - p0) * f * f);
                        },
                    },
                    form_);
}

double EnergyDistribution::quantile(double prob) const {
  if (!(prob > 0.0 && prob < 1.0)) raise(Errc::domain_error, "quantile probability must lie in (0, 1)");
  if (const auto* d = std::get_if<TwoPoint>(&form_)) {
    const double lo = std::min(d->E1, d->E2);
    return cdf(lo) >= prob ? lo : std::max(d->E1, d->E2);
  }
  auto [lo, hi] = support();
  const double scale = energy_scale();
  const double mid = peak_location();
  if (!std::isfinite(lo)) {
    lo = mid - scale;
    while (cdf(lo) > prob) lo = mid - 2.0 * (mid - lo);
  }
  if (!std::isfinite(hi)) {
    hi = mid + scale;
    while (cdf(hi) < prob) hi = mid + 2.0 * (hi - mid);
  }
  if (cdf(lo) >= prob) return lo;
  const double tol = 1e-13 * std::max({std::abs(lo), std::abs(hi), scale});
  return find_root([&](double E) { return cdf(E) - prob; }, {lo, hi, tol});
}

std::pair<double, double> EnergyDistribution::support() const {
  return std::visit(overloaded{
                        [](const Lorentzian&) { return std::pair{-inf, inf}; },
                        [](const GaussianSpec&) { return std::pair{-inf, inf}; },
                        [](const TruncatedParabola& d) {
                          return std::pair{d.center - sqrt5 * d.deltaE, d.center + sqrt5 * d.deltaE};
                        },
                        [](const Stepwise& d) {
                          return std::pair{d.center - sqrt3 * d.deltaE, d.center + sqrt3 * d.deltaE};
                        },
                        [](const Bhattacharyya& d) { return std::pair{d.onset, inf}; },
                        [](const TwoPoint& d) {
                          // a zero-weight point does not belong to the support
                          if (d.w == 0.0) return std::pair{d.E2, d.E2};
                          if (d.w == 1.0) return std::pair{d.E1, d.E1};
                          return std::pair{std::min(d.E1, d.E2), std::max(d.E1, d.E2)};
                        },
                        [](const Sampled& d) { return std::pair{d.grid.start, d.grid.back()}; },
                    },
                    form_);
}

Moments EnergyDistribution::moments() const {
  return std::visit(overloaded{
                        [](const Lorentzian& d) { return Moments{d.E0, inf, false}; },
                        [](const GaussianSpec& d) { return Moments{d.mean, d.deltaE * d.deltaE, true}; },
                        [](const TruncatedParabola& d) { return Moments{d.center, d.deltaE * d.deltaE, true}; },
                        [](const Stepwise& d) { return Moments{d.center, d.deltaE * d.deltaE, true}; },
                        [](const Bhattacharyya& d) {
                          return Moments{d.onset + d.deltaE / std::sqrt(2.0), d.deltaE * d.deltaE, true};
                        },
                        [](const TwoPoint& d) {
                          const double gap = d.E2 - d.E1;
                          return Moments{d.w * d.E1 + (1.0 - d.w) * d.E2, d.w * (1.0 - d.w) * gap * gap, true};
                        },
                        [](const Sampled& d) {
                          double m = 0.0;
                          for (std::size_t i = 0; i < d.grid.size; ++i)
                            m += trapezoid_weight(i, d.grid.size) * d.grid.at(i) * d.values[i];
                          m *= d.grid.step;
                          // Dyadic tail test: second moment within the full half-width R
                          // against that within R/2.
                          const double R = std::max(m - d.grid.start, d.grid.back() - m);
                          double full = 0.0;
                          double half = 0.0;
                          for (std::size_t i = 0; i < d.grid.size; ++i) {
                            const double x = d.grid.at(i) - m;
                            const double c = trapezoid_weight(i, d.grid.size) * x * x * d.values[i];
                            full += c;
                            if (std::abs(x) <= 0.5 * R) half += c;
                          }
                          full *= d.grid.step;
                          half *= d.grid.step;
                          const bool finite = full > 0.0 && (full - half) <= 0.01 * full;
                          return Moments{m, full, finite};
                        },
                    },
                    form_);
}

double EnergyDistribution::expectation(const RealFunction& g, const QuadratureSpec& spec) const {
  return std::visit(overloaded{
                        [&](const Lorentzian& d) {
                          const double h = 0.5 * d.Gamma;
                          return integrate([&](double x) { return g(d.E0 + h * x) / (pi * (1.0 + x * x)); }, -inf, inf,
                                           spec);
                        },
                        [&](const GaussianSpec& d) {
                          const double c = 1.0 / std::sqrt(2.0 * pi);
                          return integrate([&](double x) { return g(d.mean + d.deltaE * x) * c * std::exp(-0.5 * x * x); },
                                           -inf, inf, spec);
                        },
                        [&](const TruncatedParabola& d) {
                          return integrate([&](double x) { return g(d.center + d.deltaE * x) * std::sqrt(45.0) / 20.0 * (1.0 - x * x / 5.0); },
                                           -sqrt5, sqrt5, spec);
                        },
                        [&](const Stepwise& d) {
                          return integrate([&](double x) { return g(d.center + d.deltaE * x) * sqrt3 / 6.0; }, -sqrt3,
                                           sqrt3, spec);
                        },
                        [&](const Bhattacharyya& d) {
                          // E = onset + theta x^2 turns P dE into (2/sqrt(pi)) exp(-x^2) dx
                          const double theta = std::sqrt(2.0) * d.deltaE;
                          return integrate([&](double x) { return g(d.onset + theta * x * x) * 2.0 / std::sqrt(pi) * std::exp(-x * x); },
                                           0.0, inf, spec);
                        },
                        [&](const TwoPoint& d) { return d.w * g(d.E1) + (1.0 - d.w) * g(d.E2); },
                        [&](const Sampled& d) {
                          double s = 0.0;
                          for (std::size_t i = 0; i < d.grid.size; ++i)
                            s += trapezoid_weight(i, d.grid.size) * g(d.grid.at(i)) * d.values[i];
                          return s * d.grid.step;
                        },
                    },
                    form_);
}

double EnergyDistribution::integrate_over_support(const RealFunction& h, const QuadratureSpec& spec) const {
  return std::visit(overloaded{
                        [&](const Lorentzian& d) {
                          const double s = 0.5 * d.Gamma;
                          return integrate([&](double x) { return s * h(d.E0 + s * x); }, -inf, inf, spec);
                        },
                        [&](const GaussianSpec& d) {
                          return integrate([&](double x) { return d.deltaE * h(d.mean + d.deltaE * x); }, -inf, inf, spec);
                        },
                        [&](const TruncatedParabola&) {
                          const auto [lo, hi] = support();
                          return integrate(h, lo, hi, spec);
                        },
                        [&](const Stepwise&) {
                          const auto [lo, hi] = support();
                          return integrate(h, lo, hi, spec);
                        },
                        [&](const Bhattacharyya& d) {
                          const double theta = std::sqrt(2.0) * d.deltaE;
                          return integrate([&](double x) { return 2.0 * theta * x * h(d.onset + theta * x * x); }, 0.0,
                                           inf, spec);
                        },
                        [&](const TwoPoint&) -> double {
                          raise(Errc::domain_error, "two-point distribution has no density to integrate");
                        },
                        [&](const Sampled& d) {
                          double s = 0.0;
                          for (std::size_t i = 0; i < d.grid.size; ++i)
                            s += trapezoid_weight(i, d.grid.size) * h(d.grid.at(i));
                          return s * d.grid.step;
                        },
                    },
                    form_);
}

std::optional<double> EnergyDistribution::central_moment(int order, const QuadratureSpec& spec) const {
  if (order < 0) raise(Errc::domain_error, "moment order must be non-negative");
  if (order == 0) return 1.0;
  const Moments m = moments();
  if (std::holds_alternative<Lorentzian>(form_)) return std::nullopt;
  if (!m.finite && order >= 2) return std::nullopt;
  if (const auto* d = std::get_if<GaussianSpec>(&form_)) {
    if (order % 2 == 1) return 0.0;
    double dfact = 1.0;
    for (int k = order - 1; k > 1; k -= 2) dfact *= k;
    return dfact * std::pow(d->deltaE, order);
  }
  return expectation([&](double E) { return std::pow(E - m.mean, order); }, spec);
}

std::optional<double> EnergyDistribution::absolute_moment(double p, const QuadratureSpec& spec) const {
  if (!(p > 0.0)) raise(Errc::domain_error, "moment power must be positive");
  if (std::holds_alternative<Lorentzian>(form_) && p >= 1.0) return std::nullopt;
  if (is_sampled() && !moments().finite && p >= 2.0) return std::nullopt;
  return expectation([&](double E) { return std::pow(std::abs(E), p); }, spec);
}

std::optional<double> EnergyDistribution::peak() const {
  return std::visit(overloaded{
                        [](const Lorentzian& d) -> std::optional<double> { return 2.0 / (pi * d.Gamma); },
                        [](const GaussianSpec& d) -> std::optional<double> { return 1.0 / (std::sqrt(2.0 * pi) * d.deltaE); },
                        [](const TruncatedParabola& d) -> std::optional<double> { return std::sqrt(45.0) / 20.0 / d.deltaE; },
                        [](const Stepwise& d) -> std::optional<double> { return sqrt3 / (6.0 * d.deltaE); },
                        [](const Bhattacharyya&) -> std::optional<double> { return std::nullopt; },
                        [](const TwoPoint&) -> std::optional<double> { return std::nullopt; },
                        [](const Sampled& d) -> std::optional<double> {
                          const auto it = std::max_element(d.values.begin(), d.values.end());
                          const auto i = static_cast<std::size_t>(it - d.values.begin());
                          if (i == 0 || i + 1 == d.values.size()) return *it;
                          const double y0 = d.values[i - 1], y1 = d.values[i], y2 = d.values[i + 1];
                          const double denom = y0 - 2.0 * y1 + y2;
                          if (!(denom < 0.0)) return y1;
                          const double off = 0.5 * (y0 - y2) / denom;
                          return y1 - 0.25 * (y0 - y2) * off;
                        },
                    },
                    form_);
}

double EnergyDistribution::peak_location() const {
  return std::visit(overloaded{
                        [](const Lorentzian& d) { return d.E0; },
                        [](const GaussianSpec& d) { return d.mean; },
                        [](const TruncatedParabola& d) { return d.center; },
                        [](const Stepwise& d) { return d.center; },
                        [](const Bhattacharyya& d) { return d.onset; },
                        [](const TwoPoint& d) { return d.w >= 0.5 ? d.E1 : d.E2; },
                        [](const Sampled& d) {
                          const auto it = std::max_element(d.values.begin(), d.values.end());
                          const auto i = static_cast<std::size_t>(it - d.values.begin());
                          if (i == 0 || i + 1 == d.values.size()) return d.grid.at(i);
                          const double y0 = d.values[i - 1], y1 = d.values[i], y2 = d.values[i + 1];
                          const double denom = y0 - 2.0 * y1 + y2;
                          if (!(denom < 0.0)) return d.grid.at(i);
                          return d.grid.at(i) + 0.5 * (y0 - y2) / denom * d.grid.step;
                        },
                    },
                    form_);
}

std::complex<double> EnergyDistribution::amplitude(double t) const {
  using C = std::complex<double>;
  const double s = t / hbar_;
  return std::visit(overloaded{
                        [&](const Lorentzian& d) { return std::polar(std::exp(-0.5 * d.Gamma * std::abs(s)), -d.E0 * s); },
                        [&](const GaussianSpec& d) {
                          const double x = d.deltaE * s;
                          return std::polar(std::exp(-0.5 * x * x), -d.mean * s);
                        },
                        [&](const TruncatedParabola& d) {
                          return parabola_kernel(sqrt5 * d.deltaE * s) * std::polar(1.0, -d.center * s);
                        },
                        [&](const Stepwise& d) { return sinc(sqrt3 * d.deltaE * s) * std::polar(1.0, -d.center * s); },
                        [&](const Bhattacharyya& d) {
                          const double theta = std::sqrt(2.0) * d.deltaE;
                          return std::polar(1.0, -d.onset * s) / std::sqrt(C(1.0, theta * s));
                        },
                        [&](const TwoPoint& d) {
                          return d.w * std::polar(1.0, -d.E1 * s) + (1.0 - d.w) * std::polar(1.0, -d.E2 * s);
                        },
                        [&](const Sampled& d) {
                          C sum = 0.0;
                          for (std::size_t i = 0; i < d.grid.size; ++i)
                            sum += trapezoid_weight(i, d.grid.size) * d.values[i] * std::polar(1.0, -d.grid.at(i) * s);
                          return sum * d.grid.step;
                        },
                    },
                    form_);
}

AmplitudeDecay EnergyDistribution::amplitude_decay() const {
  return std::visit(overloaded{
                        [](const Lorentzian&) { return AmplitudeDecay{inf, std::nullopt}; },
                        [](const GaussianSpec&) { return AmplitudeDecay{inf, std::nullopt}; },
                        [&](const TruncatedParabola& d) {
                          return AmplitudeDecay{2.0, pi * hbar_ / (sqrt5 * d.deltaE)};
                        },
                        [&](const Stepwise& d) {
                          return AmplitudeDecay{1.0, pi * hbar_ / (sqrt3 * d.deltaE)};
                        },
                        [](const Bhattacharyya&) { return AmplitudeDecay{0.5, std::nullopt}; },
                        [&](const TwoPoint& d) {
                          const double gap = std::abs(d.E2 - d.E1);
                          return AmplitudeDecay{0.0, gap > 0.0 ? std::optional(2.0 * pi * hbar_ / gap) : std::nullopt};
                        },
                        [](const Sampled&) {
                          return AmplitudeDecay{std::numeric_limits<double>::quiet_NaN(), std::nullopt};
                        },
                    },
                    form_);
}

double EnergyDistribution::energy_scale() const {
  if (const auto* d = std::get_if<Lorentzian>(&form_)) return d->Gamma;
  const Moments m = moments();
  if (!m.finite) {
    const auto [lo, hi] = support();
    return (hi - lo) / 4.0;
  }
  return std::sqrt(m.variance);
}

EnergyDistribution EnergyDistribution::shifted(double dE) const {
  require_finite(dE, "shift");
  DistributionForm f = std::visit(overloaded{
                                      [&](Lorentzian d) -> DistributionForm { d.E0 += dE; return d; },
                                      [&](GaussianSpec d) -> DistributionForm { d.mean += dE; return d; },
                                      [&](TruncatedParabola d) -> DistributionForm { d.center += dE; return d; },
                                      [&](Stepwise d) -> DistributionForm { d.center += dE; return d; },
                                      [&](Bhattacharyya d) -> DistributionForm { d.onset += dE; return d; },
                                      [&](TwoPoint d) -> DistributionForm { d.E1 += dE; d.E2 += dE; return d; },
                                      [&](Sampled d) -> DistributionForm { d.grid.start += dE; return d; },
                                  },
                                  form_);
  return EnergyDistribution(std::move(f), hbar_);
}

EnergyDistribution EnergyDistribution::scaled(double lambda) const {
  require_positive(lambda, "scale factor");
  DistributionForm f = std::visit(overloaded{
                                      [&](Lorentzian d) -> DistributionForm { d.E0 *= lambda; d.Gamma *= lambda; return d; },
                                      [&](GaussianSpec d) -> DistributionForm { d.mean *= lambda; d.deltaE *= lambda; return d; },
                                      [&](TruncatedParabola d) -> DistributionForm { d.center *= lambda; d.deltaE *= lambda; return d; },
                                      [&](Stepwise d) -> DistributionForm { d.center *= lambda; d.deltaE *= lambda; return d; },
                                      [&](Bhattacharyya d) -> DistributionForm { d.onset *= lambda; d.deltaE *= lambda; return d; },
                                      [&](TwoPoint d) -> DistributionForm { d.E1 *= lambda; d.E2 *= lambda; return d; },
                                      [&](Sampled d) -> DistributionForm {
                                        d.grid.start *= lambda;
                                        d.grid.step *= lambda;
                                        for (double& v : d.values) v /= lambda;
                                        return d;
                                      },
                                  },
                                  form_);
  return EnergyDistribution(std::move(f), hbar_);
}

}  // namespace etu

#include "etu/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "json.hpp"

#include "etu/decay_times.hpp"
#include "etu/error.hpp"
#include "etu/extremal.hpp"
#include "etu/speed_limits.hpp"
#include "etu/survival.hpp"

namespace etu {
namespace {

using json = nlohmann::ordered_json;
constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

const std::map<std::string, std::string, std::less<>>& family_sources() {
  static const std::map<std::string, std::string, std::less<>> m = {
      {"Reference", "catalog reference value"},
      {"Luo", "Luo inequality Q(t) <= (1 + sqrt Q(2t))/2"},
      {"ShortTime", "short-time expansion Q = 1 - (DeltaE t/hbar)^2 + O(t^4)"},
      {"MT-cosine", "Mandelstam-Tamm Q(t) >= cos^2(DeltaE t/hbar)"},
      {"MT-rate", "Mandelstam-Tamm rate |dQ/dt| <= (2 DeltaE/hbar) sqrt(Q(1-Q))"},
      {"ExpWindow", "exponential decay violates the rate bound at short times"},
      {"MT-halflife", "Mandelstam-Tamm half-life bound T1/2 DeltaE >= pi hbar/4"},
      {"Fleming", "Fleming bound tau0 DeltaE >= pi hbar/4"},
      {"Gislason", "Gislason-Sabelli-Wood sharp bound tau0 DeltaE >= 3 pi hbar/(5 sqrt5)"},
      {"EqWidth-star", "equivalent-width bound tau* DeltaE* >= pi hbar/4"},
      {"EqWidth-2star", "equivalent-width bound tau** DeltaE** >= pi hbar/2"},
      {"Consistency", "tau* = tau**^2/tau0 and DeltaE* = DeltaE**^2 tau0/(pi hbar)"},
      {"EqWidthPair", "equivalent widths of a Fourier pair multiply to 2 pi"},
      {"Wigner-tilde", "Wigner time-energy relation epsilon tau~ >= hbar/2"},
      {"HU", "Hilgevoord-Uffink tau_beta W_alpha >= 2 hbar arccos((beta + 1 - alpha)/alpha)"},
      {"ML", "Margolus-Levitin <E> T_perp >= pi hbar/2"},
      {"LuoZhang", "Luo-Zhang bound on T_alpha from <E^p>"},
      {"MT-orthogonal", "Mandelstam-Tamm DeltaE T_perp >= pi hbar/2"},
      {"Pfeifer", "Pfeifer envelope sin(delta0 - h_t) <= |<phi|psi_t>| <= sin(delta0 + h_t)"},
      {"Yurtsever", "Yurtsever chain of moment inequalities at T_perp"},
      {"ET0G", "Gaussian-state bound DeltaE T0 >= hbar (2 mu^3)^(-1/2)"},
      {"T0-oracle", "closed-form T0 against phase-space quadrature"},
      {"EberlySingh", "Eberly-Singh DeltaE T1 >= hbar"},
      {"KaySilverman", "Kay-Silverman Delta omega+ Delta t >= |1/2 - |F(0)|^2 omega-bar+|"},
      {"TimeBandwidth", "Delta t Delta omega+ >= mu for real signals"},
  };
  return m;
}

const std::string& source_of(const std::string& family) { return family_sources().find(family)->second; }

bool soft_failure(Errc c) {
  switch (c) {
    case Errc::not_reached:
    case Errc::level_not_reached:
    case Errc::not_applicable:
    case Errc::divergent:
    case Errc::moment_divergent:
    case Errc::bound_inapplicable:
    case Errc::no_crossing:
    case Errc::infinite_variance:
    case Errc::zero_dispersion:
    case Errc::zero_at_origin:
      return true;
    default:
      return false;
  }
}

// Collects the reports of one entry for the requested families.
class Collector {
 public:
  Collector(std::string subject, const std::optional<std::vector<std::string>>& families)
      : subject_(std::move(subject)) {
    if (families) wanted_ = std::set<std::string>(families->begin(), families->end());
  }

  bool wants(const std::string& family) const { return !wanted_ || wanted_->count(family) > 0; }
  bool wants_any(std::initializer_list<const char*> fams) const {
    return std::any_of(fams.begin(), fams.end(), [&](const char* f) { return wants(f); });
  }

  void add(BoundReport r) {
    if (!wants(family_of(r.name))) return;
    r.subject = subject_;
    out_.push_back(std::move(r));
  }
  void add(std::vector<BoundReport> rs) {
    for (auto& r : rs) add(std::move(r));
  }
  void skip(const std::string& family, const std::string& reason) {
    if (wants(family)) add(not_applicable(family, subject_, source_of(family), reason));
  }

  // Runs fn for the families; soft numerical outcomes become not-applicable
  // reports for each of them.
  template <class Fn>
  void guarded(std::initializer_list<const char*> fams, Fn&& fn) {
    if (!wants_any(fams)) return;
    try {
      fn();
    } catch (const Error& e) {
      if (!soft_failure(e.code())) throw;
      for (const char* f : fams) skip(f, e.what());
    }
  }

  const std::string& subject() const { return subject_; }
  std::vector<BoundReport> take() { return std::move(out_); }

 private:
  std::string subject_;
  std::optional<std::set<std::string>> wanted_;
  std::vector<BoundReport> out_;
};

std::optional<double> finite_deltaE(const EnergyDistribution& P) {
  const Moments m = P.moments();
  if (!m.finite) return std::nullopt;
  return m.deltaE();
}

// 2 int_0^inf Re[exp(i E0 t/hbar) chi(t)] dt / hbar, the full-line integral of
// the transform of P(E0 + x) in units where its variable is t/hbar.
double centered_amplitude_integral(const EnergyDistribution& P, double E0) {
  const double hbar = P.hbar();
  auto g = [&](double t) { return std::real(std::polar(1.0, E0 * t / hbar) * P.amplitude(t)); };
  const AmplitudeDecay decay = P.amplitude_decay();
  const double T = P.time_scale();
  double total = 0.0;
  if (std::isinf(decay.power)) {
    total = integrate([&](double s) { return T * g(s * T); }, 0.0, inf);
  } else if (decay.period) {
    total = integrate_periodic_tail(g, 0.0, *decay.period, decay.power);
  } else if (decay.power > 1.0) {
    total = integrate([&](double s) { return T * g(s * T); }, 0.0, inf);
  } else {
    raise(Errc::divergent, "the amplitude is not integrable");
  }
  return 2.0 * total / hbar;
}

BoundReport distribution_width_pair(const EnergyDistribution& P) {
  if (P.has_point_masses() || !P.peak()) raise(Errc::not_applicable, "P has no finite value at its peak");
  const double E0 = P.peak_location();
  const double p0 = P.density(E0);
  if (!(p0 > 0.0)) raise(Errc::zero_at_origin, "P vanishes at its peak");
  const double product = centered_amplitude_integral(P, E0) / p0;
  BoundReport r = make_bound("EqWidthPair", "", product, Relation::eq, 2.0 * pi, source_of("EqWidthPair"), 2e-6 * pi);
  r.note = "W(P) W(chi) about the peak of P";
  return r;
}

BoundReport signal_width_pair(const SignalPair& s) {
  const double wf = equivalent_width(s.t, std::span<const double>(s.f));
  const Complex wF = equivalent_width(s.omega, std::span<const Complex>(s.F));
  BoundReport r = make_bound("EqWidthPair", "", wf * wF.real(), Relation::eq, 2.0 * pi, source_of("EqWidthPair"),
                             2e-6 * pi);
  r.note = "W(f) W(F)";
  return r;
}

double time_bandwidth(const SignalPair& s) {
  const SignalPair n = normalized(s);
  return time_moments(n).spread * positive_frequency_moments(n).spread;
}

void evaluate_distribution(const EnergyDistribution& P, const CatalogEntry& entry, Collector& c) {
  const double hbar = P.hbar();
  const SurvivalAmplitude Q = entry.n_t > 0 || entry.t_max > 0.0
                                  ? survival_amplitude(P, entry.t_max > 0.0 ? entry.t_max : 40.0 * P.time_scale(),
                                                       entry.n_t > 0 ? entry.n_t : std::size_t{1} << 14)
                                  : survival_amplitude(P);
  const auto dE = finite_deltaE(P);

  c.guarded({"Luo"}, [&] { c.add(luo_check(Q)); });
  c.guarded({"ShortTime"}, [&] { c.add(short_time_check(P, Q)); });
  c.guarded({"MT-cosine", "MT-rate", "ExpWindow", "MT-halflife", "Fleming", "Gislason"},
            [&] { c.add(mandelstam_tamm_check(Q, dE ? *dE : P.energy_scale())); });

  c.guarded({"EqWidth-star", "EqWidth-2star", "Consistency"}, [&] {
    const ModifiedTimes m = modified_times(P, Q);
    c.add(make_bound("EqWidth-star", "", m.tau_star * m.deltaE_star, Relation::geq, pi * hbar / 4.0,
                     source_of("EqWidth-star"), 1e-8 * hbar));
    c.add(make_bound("EqWidth-2star", "", m.tau_2star * m.deltaE_2star, Relation::geq, pi * hbar / 2.0,
                     source_of("EqWidth-2star"), 1e-8 * hbar));
    c.add(make_bound("Consistency(tau)", "", m.tau_star, Relation::eq, m.tau_2star * m.tau_2star / m.tau0,
                     source_of("Consistency"), 1e-6 * m.tau_star));
    c.add(make_bound("Consistency(energy)", "", m.deltaE_star, Relation::eq,
                     m.deltaE_2star * m.deltaE_2star * m.tau0 / (pi * hbar), source_of("Consistency"),
                     1e-6 * m.deltaE_star));
  });
  c.guarded({"EqWidthPair"}, [&] { c.add(distribution_width_pair(P)); });
  c.guarded({"Wigner-tilde"}, [&] { c.add(wigner_form_times(P, Q).bound); });
  c.guarded({"HU"}, [&] { c.add(hilgevoord_uffink(P, 0.9, Q, 0.5).bound); });

  c.guarded({"ML", "LuoZhang", "Yurtsever"}, [&] {
    const SpeedLimitInput in = prepare_speed_limit(P);
    c.guarded({"ML"}, [&] { c.add(margolus_levitin_bound(in)); });
    c.guarded({"LuoZhang"}, [&] {
      for (double p : {1.0, 2.0}) c.add(luo_zhang_bound(in, 0.25, p));
    });
    c.guarded({"Yurtsever"}, [&] { c.add(yurtsever_chain(in, 3)); });
  });
  if (dE) {
    c.guarded({"MT-orthogonal"}, [&] { c.add(mt_orthogonality_bound(Q, *dE)); });
    c.guarded({"Pfeifer"}, [&] { c.add(pfeifer_envelope(Q, *dE)); });
  } else {
    c.skip("MT-orthogonal", "DeltaE is infinite");
    c.skip("Pfeifer", "DeltaE is infinite");
  }
}

void evaluate_state(const GaussianWignerState& s, Collector& c) {
  c.guarded({"ET0G"}, [&] { c.add(stationarity_bound_check(s)); });
  if (c.wants("T0-oracle")) {
    const double T0 = stationarity_time(s);
    if (std::isfinite(T0)) {
      c.add(make_bound("T0-oracle", "", wigner_T0_oracle(s), Relation::eq, T0, source_of("T0-oracle"), 1e-5 * T0));
    } else {
      c.skip("T0-oracle", "the state is stationary");
    }
  }
  if (c.wants("EberlySingh")) {
    const double mu = purity(s);
    const double dE = std::sqrt(std::max(0.0, energy_dispersion(s)));
    if (std::abs(mu - 1.0) > 1e-12) {
      c.skip("EberlySingh", "the state is mixed");
    } else {
      c.guarded({"EberlySingh"}, [&] { c.add(pure_state_times(dE, s.params().hbar).eberly_singh); });
    }
  }
}

void evaluate_signal(const SignalPair& s, Collector& c) {
  c.guarded({"KaySilverman"}, [&] { c.add(kay_silverman_bound(s)); });
  if (c.wants("TimeBandwidth"))
    c.add(make_bound("TimeBandwidth", "", time_bandwidth(s), Relation::geq, solve_mu(), source_of("TimeBandwidth"),
                     1e-6));
  c.guarded({"EqWidthPair"}, [&] { c.add(signal_width_pair(s)); });
}

SignalPair gaussian_signal(double sigma) {
  const std::size_t n = 4095;
  const double extent = 12.0 * sigma;
  const UniformGrid omega = UniformGrid::centered(2.0 * extent / static_cast<double>(n - 1), n);
  std::vector<Complex> F(n);
  for (std::size_t i = 0; i < n; ++i) F[i] = std::exp(-0.5 * std::pow(omega.at(i) / sigma, 2));
  return normalized(signal_from_spectrum(omega, F));
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

json number_json(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return std::strtod(format_number(v).c_str(), nullptr);
}

double number_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return inf;
    if (s == "-inf") return -inf;
    if (s == "nan") return std::nan("");
  }
  raise(Errc::parse_error, "expected a number, got " + j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

std::string_view to_string(ValueSource s) {
  switch (s) {
    case ValueSource::literature: return "literature";
    case ValueSource::closed_form: return "closed_form";
    case ValueSource::computed: return "computed";
  }
  return "?";
}

const std::vector<std::string>& bound_families() {
  static const std::vector<std::string> v = {
      "Reference", "Luo",          "ShortTime",   "MT-cosine",    "MT-rate",      "ExpWindow",     "MT-halflife",
      "Fleming",   "Gislason",     "EqWidth-star", "EqWidth-2star", "Consistency", "EqWidthPair",   "Wigner-tilde",
      "HU",        "ML",           "LuoZhang",    "MT-orthogonal", "Pfeifer",     "Yurtsever",     "ET0G",
      "T0-oracle", "EberlySingh",  "KaySilverman", "TimeBandwidth"};
  return v;
}

std::string family_of(std::string_view report_name) {
  return std::string(report_name.substr(0, report_name.find('(')));
}

double entry_quantity(const CatalogObject& object, std::string_view q) {
  auto unknown = [&]() -> double { raise(Errc::domain_error, "no quantity '" + std::string(q) + "' for this entry"); };
  if (const auto* P = std::get_if<EnergyDistribution>(&object)) {
    const double hbar = P->hbar();
    const SurvivalAmplitude Q = survival_amplitude(*P);
    auto dE = [&] {
      const auto d = finite_deltaE(*P);
      if (!d) raise(Errc::infinite_variance, "DeltaE is infinite");
      return *d;
    };
    if (q == "tau0") return fleming_tau0(Q);
    if (q == "tau0*DeltaE") return fleming_tau0(Q) * dE();
    if (q == "T1/2*DeltaE") return half_life(Q) * dE();
    if (q == "tau*DeltaE*") {
      const auto m = modified_times(*P, Q);
      return m.tau_star * m.deltaE_star;
    }
    if (q == "tau**DeltaE**") {
      const auto m = modified_times(*P, Q);
      return m.tau_2star * m.deltaE_2star;
    }
    if (q == "tau~*epsilon") {
      const auto w = wigner_form_times(*P, Q);
      return w.tau_tilde * w.epsilon;
    }
    if (q == "tau1") return fujiwara_times(Q, *P).tau1;
    if (q == "Delta1t") return fujiwara_times(Q, *P).delta1t;
    if (q == "epsilon*Delta1t") return fujiwara_times(Q, *P).product;
    if (q == "Tperp*DeltaE") return orthogonality_time(Q) * dE();
    if (q == "<E>*Tperp") {
      const SpeedLimitInput in = prepare_speed_limit(*P);
      return in.P.moments().mean * orthogonality_time(in.Q);
    }
    (void)hbar;
    return unknown();
  }
  if (const auto* s = std::get_if<GaussianWignerState>(&object)) {
    if (q == "2(DeltaE*T0/hbar)^2") return stationarity_product(*s);
    if (q == "T0") return stationarity_time(*s);
    if (q == "purity") return purity(*s);
    if (q == "mu^-3") return std::pow(purity(*s), -3);
    return unknown();
  }
  const auto& sig = std::get<SignalPair>(object);
  if (q == "DeltaT*DeltaOmega+") return time_bandwidth(sig);
  return unknown();
}

std::vector<CatalogEntry> default_catalog(double hbar) {
  using VS = ValueSource;
  const double sqrt5 = std::sqrt(5.0), sqrt3 = std::sqrt(3.0);
  std::vector<CatalogEntry> c;
  auto dist = [&](std::string name, DistributionForm form, std::vector<ExpectedValue> ex) {
    for (auto& e : ex) e.value *= hbar, e.tolerance *= hbar;
    c.push_back({std::move(name), EnergyDistribution(std::move(form), hbar), std::move(ex)});
  };
  // Lorentzian of width Gamma = 1: its times are multiples of hbar/Gamma = hbar,
  // so every reference scales with hbar like the products do.
  dist("lorentzian", Lorentzian{0.0, 1.0},
       {{"tau0", 1.0, 1e-6, VS::literature},
        {"tau*DeltaE*", pi / 4.0, 1e-6, VS::literature},
        {"tau**DeltaE**", pi / 2.0, 1e-6, VS::literature},
        {"tau~*epsilon", 1.0 / std::sqrt(2.0), 1e-6, VS::literature},
        {"tau1", 1.0, 1e-6, VS::literature},
        {"epsilon*Delta1t", 0.5, 1e-6, VS::literature}});
  dist("gaussian", GaussianSpec{0.0, 1.0},
       {{"tau0*DeltaE", std::sqrt(pi) / 2.0, 1e-6, VS::literature},
        {"tau~*epsilon", 0.5, 1e-6, VS::literature},
        {"epsilon*Delta1t", 0.301, 1e-3, VS::literature}});
  dist("truncated-parabola", TruncatedParabola{1.0, 0.0},
       {{"tau0*DeltaE", 3.0 * pi / (5.0 * sqrt5), 1e-6, VS::literature},
        {"Tperp*DeltaE", 4.493409457909064 / sqrt5, 1e-6, VS::computed}});
  dist("stepwise", Stepwise{1.0, 0.0},
       {{"tau0*DeltaE", pi / (2.0 * sqrt3), 1e-6, VS::literature},
        {"Tperp*DeltaE", pi / sqrt3, 1e-6, VS::closed_form}});
  dist("bhattacharyya", Bhattacharyya{1.0, 0.0}, {{"T1/2*DeltaE", std::sqrt(1.5), 1e-6, VS::literature}});
  dist("two-point", TwoPoint{0.0, 2.0, 0.5},
       {{"Tperp*DeltaE", pi / 2.0, 1e-9, VS::literature}, {"<E>*Tperp", pi / 2.0, 1e-9, VS::literature}});

  auto state = [&](std::string name, GaussianWignerState s, std::vector<ExpectedValue> ex) {
    c.push_back({std::move(name), std::move(s), std::move(ex)});
  };
  state("coherent", GaussianWignerState::coherent(1.0, 1.0, hbar, 2.0 * std::sqrt(hbar), 0.5 * std::sqrt(hbar)),
        {{"2(DeltaE*T0/hbar)^2", 1.0, 1e-9, VS::literature}});
  state("thermal", GaussianWignerState::thermal(1.0, 1.0, hbar, hbar * hbar),
        {{"T0", inf, 0.0, VS::literature}, {"purity", 0.5, 1e-12, VS::closed_form}});
  {
    GaussianStateParams p;
    p.q_mean = 0.3 * std::sqrt(hbar);
    p.sigma_q = 1.0 * hbar;
    p.sigma_p = 0.5 * hbar;
    p.sigma_qp = 0.1 * hbar;
    p.hbar = hbar;
    state("squeezed-thermal", GaussianWignerState(p), {});
  }
  {
    GaussianStateParams p;
    p.p_mean = 1.0 * std::sqrt(hbar);
    p.sigma_q = 0.5 * hbar;
    p.sigma_p = 1.0 * hbar;
    p.sigma_qp = 0.2 * hbar;
    p.omega = 0.0;
    p.hbar = hbar;
    const GaussianWignerState s(p);
    state("free-packet", s, {{"2(DeltaE*T0/hbar)^2", std::pow(purity(s), -3), 1e-9, VS::literature}});
  }

  c.push_back({"extremal-signal", extremal_solution().spectrum, {{"DeltaT*DeltaOmega+", 0.29505306, 1e-6, VS::literature}}});
  c.push_back({"gaussian-signal", gaussian_signal(1.0),
               {{"DeltaT*DeltaOmega+", std::sqrt((pi - 2.0) / (4.0 * pi)), 1e-8, VS::closed_form}}});
  return c;
}

std::vector<BoundReport> evaluate_entry(const CatalogEntry& entry,
                                        const std::optional<std::vector<std::string>>& families) {
  Collector c(entry.name, families);
  if (c.wants("Reference")) {
    for (const ExpectedValue& e : entry.expected) {
      BoundReport r = make_bound("Reference(" + e.quantity + ")", entry.name, entry_quantity(entry.object, e.quantity),
                                 Relation::eq, e.value, std::string(to_string(e.source)), e.tolerance);
      c.add(std::move(r));
    }
  }
  std::visit(
      [&](const auto& obj) {
        using T = std::decay_t<decltype(obj)>;
        if constexpr (std::is_same_v<T, EnergyDistribution>) evaluate_distribution(obj, entry, c);
        if constexpr (std::is_same_v<T, GaussianWignerState>) evaluate_state(obj, c);
        if constexpr (std::is_same_v<T, SignalPair>) evaluate_signal(obj, c);
      },
      entry.object);

  std::vector<BoundReport> out = c.take();
  const auto& fams = bound_families();
  auto rank = [&](const BoundReport& r) { return std::find(fams.begin(), fams.end(), family_of(r.name)) - fams.begin(); };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
  return out;
}

SuiteResult summarize(std::vector<BoundReport> reports) {
  SuiteResult s;
  s.worst_slack = inf;
  for (const BoundReport& r : reports) {
    switch (r.status) {
      case Status::satisfied: ++s.counts.satisfied; break;
      case Status::violated: ++s.counts.violated; break;
      case Status::not_applicable: ++s.counts.not_applicable; break;
      case Status::informational: ++s.counts.informational; break;
    }
    if ((r.status == Status::satisfied || r.status == Status::violated) && r.slack < s.worst_slack)
      s.worst_slack = r.slack;
    if (r.failing()) s.failing = true;
  }
  s.reports = std::move(reports);
  return s;
}

SuiteResult run_suite(const std::vector<CatalogEntry>& entries, const std::optional<std::vector<std::string>>& families) {
  if (families) {
    for (const std::string& f : *families)
      if (std::find(bound_families().begin(), bound_families().end(), f) == bound_families().end())
        raise(Errc::unknown_bound_name, "no bound family '" + f + "'");
    if (families->empty()) return summarize({});
  }
  std::vector<const CatalogEntry*> order;
  for (const CatalogEntry& e : entries) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->name < b->name; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i]->name == order[i - 1]->name) raise(Errc::domain_error, "duplicate catalog entry '" + order[i]->name + "'");

  const auto n = static_cast<std::ptrdiff_t>(order.size());
  std::vector<std::vector<BoundReport>> parts(order.size());
  std::vector<std::exception_ptr> errors(order.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      parts[i] = evaluate_entry(*order[i], families);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<BoundReport> all;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(all));
  return summarize(std::move(all));
}

std::string emit(const SuiteResult& result, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::ostringstream os;
    os << "name,subject,relation,lhs,rhs,slack,tolerance,status,satisfied,guaranteed,at,provenance,note\n";
    for (const BoundReport& r : result.reports) {
      os << csv_field(r.name) << ',' << csv_field(r.subject) << ',' << to_string(r.relation) << ','
         << format_number(r.lhs) << ',' << format_number(r.rhs) << ',' << format_number(r.slack) << ','
         << format_number(r.tolerance) << ',' << to_string(r.status) << ',' << (r.satisfied ? "true" : "false") << ','
         << (r.guaranteed ? "true" : "false") << ',' << (r.at ? format_number(*r.at) : "") << ','
         << csv_field(r.provenance) << ',' << csv_field(r.note) << '\n';
    }
    return os.str();
  }
  json summary = {{"reports", result.reports.size()},
                  {"satisfied", result.counts.satisfied},
                  {"violated", result.counts.violated},
                  {"not_applicable", result.counts.not_applicable},
                  {"informational", result.counts.informational},
                  {"worst_slack", number_json(result.worst_slack)},
                  {"failing", result.failing}};
  json reports = json::array();
  for (const BoundReport& r : result.reports) {
    reports.push_back({{"name", r.name},
                       {"subject", r.subject},
                       {"relation", to_string(r.relation)},
                       {"lhs", number_json(r.lhs)},
                       {"rhs", number_json(r.rhs)},
                       {"slack", number_json(r.slack)},
                       {"tolerance", number_json(r.tolerance)},
                       {"status", to_string(r.status)},
                       {"satisfied", r.satisfied},
                       {"guaranteed", r.guaranteed},
                       {"at", r.at ? number_json(*r.at) : json(nullptr)},
                       {"provenance", r.provenance},
                       {"note", r.note}});
  }
  return json{{"summary", std::move(summary)}, {"reports", std::move(reports)}}.dump(2) + "\n";
}

SuiteResult parse_suite_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    SuiteResult s;
    for (const json& r : j.at("reports")) {
      BoundReport b;
      b.name = r.at("name").get<std::string>();
      b.subject = r.at("subject").get<std::string>();
      b.relation = relation_from_string(r.at("relation").get<std::string>());
      b.lhs = number_from_json(r.at("lhs"));
      b.rhs = number_from_json(r.at("rhs"));
      b.slack = number_from_json(r.at("slack"));
      b.tolerance = number_from_json(r.at("tolerance"));
      b.status = status_from_string(r.at("status").get<std::string>());
      b.satisfied = r.at("satisfied").get<bool>();
      b.guaranteed = r.at("guaranteed").get<bool>();
      if (!r.at("at").is_null()) b.at = number_from_json(r.at("at"));
      b.provenance = r.at("provenance").get<std::string>();
      b.note = r.at("note").get<std::string>();
      s.reports.push_back(std::move(b));
    }
    const json& sum = j.at("summary");
    s.counts = {sum.at("satisfied").get<std::size_t>(), sum.at("violated").get<std::size_t>(),
                sum.at("not_applicable").get<std::size_t>(), sum.at("informational").get<std::size_t>()};
    s.worst_slack = number_from_json(sum.at("worst_slack"));
    s.failing = sum.at("failing").get<bool>();
    if (s.counts.total() != s.reports.size()) raise(Errc::parse_error, "summary counts do not match the reports");
    return s;
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::parse_error, e.what());
  }
}

}  // namespace etu

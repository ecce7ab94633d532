// Command-line front end: decay-time tables, the extremal signal, Gaussian
// Wigner states, speed limits, transforms and the verification suite.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "etu/catalog.hpp"
#include "etu/decay_times.hpp"
#include "etu/error.hpp"
#include "etu/extremal.hpp"
#include "etu/gaussian_wigner.hpp"
#include "etu/io.hpp"
#include "etu/kernels.hpp"
#include "etu/signal.hpp"
#include "etu/speed_limits.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace etu;

enum Exit { ok = 0, usage = 1, numerical = 2, violated = 3 };

struct CliConfig {
  double hbar = 1.0;
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  double t_max = 0.0;
  std::size_t n_t = 0;
};

// Distribution given by name and parameters, or by a CSV file.
struct DistributionArgs {
  std::string kind;
  double E0 = 0.0, gamma = 1.0;
  double mean = 0.0, deltaE = 1.0, center = 0.0, onset = 0.0;
  double E1 = 0.0, E2 = 2.0, w = 0.5;
  std::string in;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_distribution_options(CLI::App* cmd, DistributionArgs& d) {
  cmd->add_option("kind", d.kind,
                  "lorentzian | gaussian | truncated-parabola | stepwise | bhattacharyya | two-point | sampled");
  cmd->add_option("--E0", d.E0, "Lorentzian centre");
  cmd->add_option("--gamma", d.gamma, "Lorentzian width Gamma");
  cmd->add_option("--mean", d.mean, "Gaussian mean energy");
  cmd->add_option("--deltaE", d.deltaE, "energy spread DeltaE");
  cmd->add_option("--center", d.center, "centre of a truncated parabola or stepwise density");
  cmd->add_option("--onset", d.onset, "lowest energy of the Bhattacharyya density");
  cmd->add_option("--E1", d.E1, "first level of a two-point distribution");
  cmd->add_option("--E2", d.E2, "second level of a two-point distribution");
  cmd->add_option("--w", d.w, "weight of the first level");
  cmd->add_option("--in", d.in, "CSV file with columns E,P (takes precedence over kind)");
}

EnergyDistribution make_distribution(const DistributionArgs& d, double hbar) {
  if (!d.in.empty()) {
    std::ifstream is(d.in);
    if (!is) throw UsageError("cannot open " + d.in);
    RealTable t = read_real_csv(is);
    return EnergyDistribution::normalized_sampled(t.grid, std::move(t.values), hbar);
  }
  const std::map<std::string, std::function<DistributionForm()>> forms = {
      {"lorentzian", [&] { return DistributionForm(Lorentzian{d.E0, d.gamma}); }},
      {"gaussian", [&] { return DistributionForm(GaussianSpec{d.mean, d.deltaE}); }},
      {"truncated-parabola", [&] { return DistributionForm(TruncatedParabola{d.deltaE, d.center}); }},
      {"stepwise", [&] { return DistributionForm(Stepwise{d.deltaE, d.center}); }},
      {"bhattacharyya", [&] { return DistributionForm(Bhattacharyya{d.deltaE, d.onset}); }},
      {"two-point", [&] { return DistributionForm(TwoPoint{d.E1, d.E2, d.w}); }},
  };
  if (d.kind == "sampled") throw UsageError("a sampled distribution needs --in");
  const auto it = forms.find(d.kind);
  if (it == forms.end()) throw UsageError(d.kind.empty() ? "missing distribution kind" : "unknown distribution '" + d.kind + "'");
  return EnergyDistribution(it->second(), hbar);
}

json number(double v) {
  const std::string s = format_number(v);
  if (!std::isfinite(v)) return s;
  return json::parse(s);
}

// Widens every tolerance to at least tol and re-evaluates the verdicts.
void apply_tolerance(std::vector<BoundReport>& reports, const CliConfig& cfg) {
  if (!cfg.tol) return;
  for (BoundReport& r : reports) {
    if (r.status == Status::not_applicable) continue;
    r.tolerance = std::max(r.tolerance, *cfg.tol);
    r.satisfied = r.slack >= -r.tolerance;
    if (r.guaranteed) r.status = r.satisfied ? Status::satisfied : Status::violated;
  }
}

void write_output(const CliConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  write_file_atomically(cfg.out, [&](std::ostream& os) { os << text; });
}

// Reports plus extra key/value rows, as JSON (rows first, then the suite
// layout) or as CSV (a quantity table, a blank line, the report table).
std::string render(const CliConfig& cfg, const std::vector<std::pair<std::string, json>>& header,
                   const std::vector<std::pair<std::string, std::string>>& quantities, const SuiteResult& result) {
  if (cfg.format == "csv") {
    std::string s = "quantity,value\n";
    for (const auto& [k, v] : quantities) s += k + "," + v + "\n";
    if (!result.reports.empty()) s += "\n" + emit(result, ReportFormat::csv);
    return s;
  }
  json j;
  for (const auto& [k, v] : header) j[k] = v;
  json q = json::object();
  for (const auto& [k, v] : quantities) {
    try {
      q[k] = json::parse(v);
    } catch (const json::exception&) {
      q[k] = v;
    }
  }
  j["quantities"] = q;
  const json body = json::parse(emit(result, ReportFormat::json));
  j["summary"] = body["summary"];
  j["reports"] = body["reports"];
  return j.dump(2) + "\n";
}

std::string optional_value(const std::optional<double>& v, const char* missing = "divergent") {
  return v ? format_number(*v) : missing;
}

int exit_for(const SuiteResult& r) { return r.failing ? violated : ok; }

int cmd_decay(const CliConfig& cfg, const DistributionArgs& args) {
  const EnergyDistribution P = make_distribution(args, cfg.hbar);
  CatalogEntry entry{args.in.empty() ? args.kind : "sampled", P, {}, cfg.t_max, cfg.n_t};
  const SurvivalAmplitude Q = cfg.t_max > 0.0 || cfg.n_t > 0
                                  ? survival_amplitude(P, cfg.t_max > 0.0 ? cfg.t_max : 40.0 * P.time_scale(),
                                                       cfg.n_t > 0 ? cfg.n_t : std::size_t{1} << 14)
                                  : survival_amplitude(P);
  const DecayTimes d = decay_times(P, Q);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"deltaE", optional_value(d.deltaE, "inf")},
      {"t_half", optional_value(d.t_half, "not_reached")},
      {"tau0", optional_value(d.tau0)},
      {"tau_star", optional_value(d.tau_star)},
      {"deltaE_star", optional_value(d.deltaE_star)},
      {"tau_2star", optional_value(d.tau_2star)},
      {"deltaE_2star", optional_value(d.deltaE_2star)},
      {"tau_tilde", optional_value(d.tau_tilde)},
      {"epsilon", optional_value(d.epsilon)},
      {"tau1", optional_value(d.tau1)},
      {"delta1t", optional_value(d.delta1t)},
  };
  const std::vector<std::string> families = {"Luo",          "ShortTime",     "MT-cosine",   "MT-rate",
                                             "ExpWindow",    "MT-halflife",   "Fleming",     "Gislason",
                                             "EqWidth-star", "EqWidth-2star", "Consistency", "EqWidthPair",
                                             "Wigner-tilde", "HU"};
  std::vector<BoundReport> reports = evaluate_entry(entry, families);
  apply_tolerance(reports, cfg);
  const SuiteResult result = summarize(std::move(reports));
  write_output(cfg, render(cfg, {{"distribution", std::string(P.kind())}, {"hbar", number(cfg.hbar)}}, rows, result));
  return exit_for(result);
}

struct ExtremalArgs {
  bool compare_gaussian = false;
  double omega_max = 8.0;
  std::size_t n_omega = 4096;
  double t_max = 10.0;
  std::string spectrum_out;
  std::string signal_out;
};

int cmd_extremal(const CliConfig& cfg, const ExtremalArgs& a) {
  if (!(a.omega_max > 0.0) || !(a.t_max > 0.0)) throw UsageError("--omega-max and --t-max must be positive");
  if (a.n_omega < 16) throw UsageError("--n-omega must be at least 16");
  const double mu = solve_mu();
  const ExtremalSolution s = extremal_solution(1.0, a.n_omega, std::max(8.0, a.omega_max));
  const ExtremalTimeSignal ts = extremal_time_signal(s.spectrum);

  // Spectra divided by their value at omega = 0, on omega in [0, omega_max].
  auto write_spectrum = [&](std::ostream& os) {
    os << (a.compare_gaussian ? "omega,F_mu,F_gauss\n" : "omega,F_mu\n");
    for (std::size_t i = 0; i < s.half.size && s.half.at(i) <= a.omega_max * (1 + 1e-12); ++i) {
      const double w = s.half.at(i);
      os << format_number(w) << ',' << format_number(s.half_values[i] / s.half_values[0]);
      if (a.compare_gaussian) os << ',' << format_number(std::exp(-0.5 * w * w / (ts.sigma * ts.sigma)));
      os << '\n';
    }
  };
  // f(t)/f(0) for the even spectrum: trapezoid cosine sum over omega >= 0,
  // on a finer time grid than the transform pair provides.
  const UniformGrid t = UniformGrid::from_range(0.0, a.t_max, 1001);
  std::vector<Complex> F(s.half_values.begin(), s.half_values.end());
  std::vector<Complex> sum(t.size);
  kernels::fourier_sum(s.half, F, t, 1.0, kernels::EndWeights::trapezoid, sum);
  double min_ratio = 1.0;
  for (const Complex& z : sum) min_ratio = std::min(min_ratio, z.real() / sum[0].real());
  auto write_signal = [&](std::ostream& os) {
    os << (a.compare_gaussian ? "t,f_mu,f_gauss\n" : "t,f_mu\n");
    for (std::size_t i = 0; i < t.size; ++i) {
      os << format_number(t.at(i)) << ',' << format_number(sum[i].real() / sum[0].real());
      if (a.compare_gaussian) os << ',' << format_number(std::exp(-0.5 * std::pow(ts.sigma * t.at(i), 2)));
      os << '\n';
    }
  };
  if (!a.spectrum_out.empty()) write_file_atomically(a.spectrum_out, write_spectrum);
  if (!a.signal_out.empty()) write_file_atomically(a.signal_out, write_signal);

  char line[64];
  std::snprintf(line, sizeof line, "mu = %.8f\n", mu);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"mu", format_number(mu)},
      {"c", format_number(s.c)},
      {"b_over_c2", format_number(s.b / (s.c * s.c))},
      {"a", format_number(s.a)},
      {"euler_lagrange_residual", format_number(euler_lagrange_residual(s))},
      {"min_f_ratio", format_number(min_ratio)},
  };
  if (a.compare_gaussian) {
    rows.emplace_back("gaussian_sigma", format_number(ts.sigma));
    rows.emplace_back("gaussian_product", format_number(gaussian_product({ts.sigma}).value));
  }
  if (cfg.out.empty()) {
    std::cout << line;
    for (const auto& [k, v] : rows)
      if (k != "mu") std::cout << k << " = " << v << '\n';
    return ok;
  }
  write_output(cfg, render(cfg, {{"command", "extremal"}}, rows, summarize({})));
  return ok;
}

struct WignerArgs {
  std::string preset;
  std::string in;
  double displacement = 0.0;
  double nbar = 0.0;
  double mass = 1.0;
  double omega = 1.0;
  std::size_t oracle_n = 512;
};

int cmd_wigner(const CliConfig& cfg, const WignerArgs& a) {
  std::optional<GaussianWignerState> state;
  if (!a.in.empty()) {
    state.emplace(state_from_json(read_file(a.in)));
  } else if (a.preset == "coherent") {
    // |alpha> with real alpha = displacement: <q> = sqrt(2 hbar/(m omega)) alpha
    const double q = std::sqrt(2.0 * cfg.hbar / (a.mass * a.omega)) * a.displacement;
    state.emplace(GaussianWignerState::coherent(a.mass, a.omega, cfg.hbar, q, 0.0));
  } else if (a.preset == "thermal") {
    if (a.nbar < 0.0) throw UsageError("--nbar must be non-negative");
    const double r = cfg.hbar * (a.nbar + 0.5);
    state.emplace(GaussianWignerState::thermal(a.mass, a.omega, cfg.hbar, r * r));
  } else {
    throw UsageError(a.preset.empty() ? "give --preset or --in" : "unknown preset '" + a.preset + "'");
  }
  const GaussianWignerState& s = *state;
  const double T0 = stationarity_time(s);
  std::vector<std::pair<std::string, std::string>> rows = {
      {"purity", format_number(purity(s))},
      {"deltaE", format_number(std::sqrt(std::max(0.0, energy_dispersion(s))))},
      {"T0", format_number(T0)},
      {"product", format_number(stationarity_product(s))},
      {"mu_inv3", format_number(std::pow(purity(s), -3))},
  };
  if (std::isfinite(T0)) rows.emplace_back("T0_phase_space", format_number(wigner_T0_oracle(s, a.oracle_n)));
  std::vector<BoundReport> reports = {stationarity_bound_check(s)};
  for (auto& r : reports) r.subject = a.in.empty() ? a.preset : "state";
  apply_tolerance(reports, cfg);
  const SuiteResult result = summarize(std::move(reports));
  write_output(cfg, render(cfg, {{"state", json::parse(to_json(s.params()))}}, rows, result));
  return exit_for(result);
}

struct SpeedArgs {
  DistributionArgs dist;
  double alpha = 0.25;
  std::vector<double> p = {1.0, 2.0};
  int n_max = 3;
};

int cmd_speed(const CliConfig& cfg, const SpeedArgs& a) {
  const EnergyDistribution P = make_distribution(a.dist, cfg.hbar);
  const std::string name = a.dist.in.empty() ? a.dist.kind : "sampled";
  std::vector<BoundReport> reports;
  std::vector<std::pair<std::string, std::string>> rows;
  const Moments m = P.moments();
  const SurvivalAmplitude Q = survival_amplitude(P);
  auto soft = [&](const std::string& fam, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::not_reached:
        case Errc::level_not_reached:
        case Errc::not_applicable:
        case Errc::moment_divergent:
        case Errc::divergent:
          reports.push_back(not_applicable(fam, name, "speed limit", e.what()));
          break;
        default:
          throw;
      }
    }
  };
  soft("T_perp", [&] { rows.emplace_back("T_perp", format_number(orthogonality_time(Q))); });
  soft("ML", [&] {
    const SpeedLimitInput in = prepare_speed_limit(P);
    rows.emplace_back("shift", format_number(in.shift + 0.0));
    reports.push_back(margolus_levitin_bound(in));
    for (double p : a.p) soft("LuoZhang", [&] { reports.push_back(luo_zhang_bound(in, a.alpha, p)); });
    soft("Yurtsever", [&] {
      for (auto& r : yurtsever_chain(in, a.n_max)) reports.push_back(r);
    });
  });
  if (m.finite) {
    soft("MT-orthogonal", [&] { reports.push_back(mt_orthogonality_bound(Q, m.deltaE())); });
    for (auto& r : pfeifer_envelope(Q, m.deltaE())) reports.push_back(r);
  }
  for (auto& r : reports) r.subject = name;
  apply_tolerance(reports, cfg);
  const SuiteResult result = summarize(std::move(reports));
  write_output(cfg, render(cfg, {{"distribution", std::string(P.kind())}, {"hbar", number(cfg.hbar)}}, rows, result));
  return exit_for(result);
}

int cmd_transform(const CliConfig& cfg, const std::string& in) {
  std::ifstream is(in);
  if (!is) throw UsageError("cannot open " + in);
  std::string header;
  std::getline(is, header);
  const auto columns = std::count(header.begin(), header.end(), ',') + 1;
  is.clear();
  is.seekg(0);
  std::string text;
  if (columns == 2) {  // t,f -> omega,ReF,ImF
    const RealTable t = read_real_csv(is);
    const SignalPair s = spectrum_from_signal(t.grid, t.values);
    const ComplexTable out{s.omega, s.F};
    std::ostringstream os;
    if (cfg.format == "csv") write_csv(os, out); else os << to_json(out) << '\n';
    text = os.str();
  } else if (columns == 3) {  // omega,ReF,ImF -> t,f
    const ComplexTable t = read_complex_csv(is);
    const SignalPair s = signal_from_spectrum(t.grid, t.values);
    const RealTable out{s.t, s.f};
    std::ostringstream os;
    if (cfg.format == "csv") write_csv(os, out, "t,f"); else os << to_json(out) << '\n';
    text = os.str();
  } else {
    throw UsageError("expected columns t,f or omega,ReF,ImF");
  }
  write_output(cfg, text);
  return ok;
}

int cmd_suite(const CliConfig& cfg, const std::vector<std::string>& only) {
  std::optional<std::vector<std::string>> filter;
  if (!only.empty()) filter = only;
  SuiteResult r = run_suite(default_catalog(cfg.hbar), filter);
  if (cfg.tol) {
    apply_tolerance(r.reports, cfg);
    r = summarize(std::move(r.reports));
  }
  write_output(cfg, emit(r, cfg.format == "csv" ? ReportFormat::csv : ReportFormat::json));
  return exit_for(r);
}

int exit_for_error(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
    case Errc::unknown_bound_name:
    case Errc::invalid_state:
    case Errc::non_uniform_grid:
    case Errc::domain_error:
      return usage;
    default:
      return numerical;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-energy uncertainty relations: decay times, extremal signals, Gaussian states and speed limits"};
  app.require_subcommand(1);
  app.fallthrough();
  CliConfig cfg;
  app.add_option("--hbar", cfg.hbar, "action scale; energies and times are in units built from it")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", cfg.out, "write the main output to this file instead of stdout");
  app.add_option_function<double>(
         "--tol", [&](double t) { cfg.tol = t; }, "accept bound violations up to this absolute slack")
      ->check(CLI::NonNegativeNumber);

  DistributionArgs decay_args;
  auto* decay = app.add_subcommand("decay", "decay times and bound reports of an energy distribution");
  add_distribution_options(decay, decay_args);
  decay->add_option("--t-max", cfg.t_max, "end of the survival-amplitude grid")->check(CLI::PositiveNumber);
  decay->add_option("--n-t", cfg.n_t, "points on the survival-amplitude grid")->check(CLI::Range(16, 1 << 24));

  ExtremalArgs ext;
  auto* extremal = app.add_subcommand("extremal", "minimal Delta t Delta omega+ signal");
  extremal->add_flag("--compare-gaussian", ext.compare_gaussian, "add the Gaussian with the same omega-bar+");
  extremal->add_option("--omega-max", ext.omega_max, "largest tabulated frequency (units of omega-bar+)");
  extremal->add_option("--n-omega", ext.n_omega, "nodes on omega >= 0");
  extremal->add_option("--t-max", ext.t_max, "largest tabulated time (units of 1/omega-bar+)");
  extremal->add_option("--spectrum-out", ext.spectrum_out, "CSV file for (omega, F)");
  extremal->add_option("--signal-out", ext.signal_out, "CSV file for (t, f)");

  WignerArgs wig;
  auto* wigner = app.add_subcommand("wigner", "stationarity time and uncertainty bound of a Gaussian state");
  wigner->add_option("--preset", wig.preset, "coherent | thermal");
  wigner->add_option("--in", wig.in, "JSON state file (takes precedence over --preset)");
  wigner->add_option("--displacement", wig.displacement, "coherent amplitude alpha");
  wigner->add_option("--nbar", wig.nbar, "thermal occupation number");
  wigner->add_option("--mass", wig.mass, "oscillator mass")->check(CLI::PositiveNumber);
  wigner->add_option("--omega", wig.omega, "oscillator frequency")->check(CLI::PositiveNumber);

  SpeedArgs sp;
  auto* speed = app.add_subcommand("speed", "quantum speed limits of an energy distribution");
  add_distribution_options(speed, sp.dist);
  speed->add_option("--alpha", sp.alpha, "remaining overlap for the Luo-Zhang bound");
  speed->add_option("--p", sp.p, "moment orders for the Luo-Zhang bound");
  speed->add_option("--n-max", sp.n_max, "length of the Yurtsever chain")->check(CLI::Range(1, 10));

  std::string transform_in;
  auto* transform = app.add_subcommand("transform", "signal <-> spectrum on uniform grids");
  transform->add_option("--in", transform_in, "CSV with t,f or omega,ReF,ImF")->required();

  std::vector<std::string> only;
  auto* suite = app.add_subcommand("suite", "run every bound over the catalog");
  suite->add_option("--only", only, "restrict to these bound families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*decay) return cmd_decay(cfg, decay_args);
    if (*extremal) return cmd_extremal(cfg, ext);
    if (*wigner) return cmd_wigner(cfg, wig);
    if (*speed) return cmd_speed(cfg, sp);
    if (*transform) return cmd_transform(cfg, transform_in);
    if (*suite) return cmd_suite(cfg, only);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for_error(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return numerical;
  }
  return usage;
}

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "etu/bound_report.hpp"
#include "etu/energy_distribution.hpp"
#include "etu/gaussian_wigner.hpp"
#include "etu/signal.hpp"

namespace etu {

/// Where a reference value comes from.
enum class ValueSource {
  literature,   ///< quoted result
  closed_form,  ///< follows directly from a formula
  computed,     ///< independent numerical oracle
};
std::string_view to_string(ValueSource s);

/// A reference value for one named quantity of a catalog object, such as
/// "tau0*DeltaE" or "2(DeltaE*T0/hbar)^2". See entry_quantity for the names.
struct ExpectedValue {
  std::string quantity;
  double value;
  double tolerance;  ///< absolute
  ValueSource source;
};

using CatalogObject = std::variant<EnergyDistribution, GaussianWignerState, SignalPair>;

struct CatalogEntry {
  std::string name;
  CatalogObject object;
  std::vector<ExpectedValue> expected;
  /// Survival-amplitude grid for distributions; 0 keeps the default.
  double t_max = 0.0;
  std::size_t n_t = 0;
};

/// The standard entries: the analytic energy distributions, coherent,
/// thermal, squeezed thermal and free-packet Gaussian states, and the
/// extremal and Gaussian signals. Energies scale with hbar.
std::vector<CatalogEntry> default_catalog(double hbar = 1.0);

/// Bound families in report order. A report belongs to the family given by
/// its name up to the first '(' ("LuoZhang(0.25,1)" is in "LuoZhang").
const std::vector<std::string>& bound_families();
std::string family_of(std::string_view report_name);

/// Value of a named quantity for a catalog object. DomainError for names
/// that do not apply to the object type.
double entry_quantity(const CatalogObject& object, std::string_view quantity);

struct SuiteCounts {
  std::size_t satisfied = 0;
  std::size_t violated = 0;
  std::size_t not_applicable = 0;
  std::size_t informational = 0;

  std::size_t total() const { return satisfied + violated + not_applicable + informational; }
};

struct SuiteResult {
  std::vector<BoundReport> reports;
  SuiteCounts counts;
  /// Smallest slack over evaluated guaranteed reports; +inf when there are none.
  double worst_slack = 0.0;
  bool failing = false;  ///< some guaranteed bound is violated
};

/// Every report of one entry, optionally restricted to some families.
std::vector<BoundReport> evaluate_entry(const CatalogEntry& entry,
                                        const std::optional<std::vector<std::string>>& families = std::nullopt);

/// Evaluates every applicable bound family on every entry. nullopt runs all
/// families, an empty list none. Entries run concurrently; reports are merged
/// by entry name and then family order, so the output is deterministic.
/// UnknownBoundName for a family that does not exist; DomainError for
/// duplicate entry names.
SuiteResult run_suite(const std::vector<CatalogEntry>& entries,
                      const std::optional<std::vector<std::string>>& families = std::nullopt);

/// Recomputes counts, worst slack and the failing flag from the reports.
SuiteResult summarize(std::vector<BoundReport> reports);

enum class ReportFormat { json, csv };

/// JSON puts the summary block first; CSV is a header row plus one row per
/// report. Numbers carry 12 significant digits; non-finite values are written
/// as "inf", "-inf" or "nan".
std::string emit(const SuiteResult& result, ReportFormat format);
/// 12 significant digits, or "inf", "-inf", "nan".
std::string format_number(double v);

/// Inverse of the JSON emitter. ParseError on malformed input.
SuiteResult parse_suite_json(const std::string& text);

}  // namespace etu

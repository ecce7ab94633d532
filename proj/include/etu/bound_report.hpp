#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace etu {

enum class Relation { geq, leq, eq };

enum class Status {
  satisfied,
  violated,
  not_applicable,
  informational,  ///< evaluated, but a violation is expected or allowed
};

std::string_view to_string(Relation r);
std::string_view to_string(Status s);
Relation relation_from_string(std::string_view s);
Status status_from_string(std::string_view s);

/// One evaluated inequality instance.
///
/// slack is lhs - rhs for >=, rhs - lhs for <=, and -|lhs - rhs| for =, so a
/// non-negative slack always means "holds"; satisfied <=> slack >= -tolerance.
struct BoundReport {
  std::string name;
  std::string subject;  ///< what the bound was evaluated on
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::geq;
  double slack = 0.0;
  bool satisfied = false;
  Status status = Status::not_applicable;
  bool guaranteed = true;  ///< a violation signals a bug rather than physics
  double tolerance = 0.0;
  std::string provenance;
  std::string note;
  std::optional<double> at;  ///< abscissa (usually a time) the values refer to

  bool failing() const { return guaranteed && status == Status::violated; }
};

double signed_slack(double lhs, Relation rel, double rhs);

/// Evaluates lhs `rel` rhs. Non-guaranteed bounds get Status::informational.
BoundReport make_bound(std::string name, std::string subject, double lhs, Relation rel, double rhs,
                       std::string provenance, double tolerance = 1e-9, bool guaranteed = true);

BoundReport not_applicable(std::string name, std::string subject, std::string provenance, std::string reason);

}  // namespace etu

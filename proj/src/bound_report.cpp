#include "etu/bound_report.hpp"

#include <cmath>

#include "etu/error.hpp"

namespace etu {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::geq: return ">=";
    case Relation::leq: return "<=";
    case Relation::eq: return "=";
  }
  return "?";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::satisfied: return "satisfied";
    case Status::violated: return "violated";
    case Status::not_applicable: return "not_applicable";
    case Status::informational: return "informational";
  }
  return "?";
}

Relation relation_from_string(std::string_view s) {
  if (s == ">=") return Relation::geq;
  if (s == "<=") return Relation::leq;
  if (s == "=") return Relation::eq;
  raise(Errc::parse_error, "unknown relation '" + std::string(s) + "'");
}

Status status_from_string(std::string_view s) {
  for (Status st : {Status::satisfied, Status::violated, Status::not_applicable, Status::informational})
    if (to_string(st) == s) return st;
  raise(Errc::parse_error, "unknown status '" + std::string(s) + "'");
}

double signed_slack(double lhs, Relation rel, double rhs) {
  switch (rel) {
    case Relation::geq: return lhs - rhs;
    case Relation::leq: return rhs - lhs;
    case Relation::eq: return -std::abs(lhs - rhs);
  }
  return 0.0;
}

BoundReport make_bound(std::string name, std::string subject, double lhs, Relation rel, double rhs,
                       std::string provenance, double tolerance, bool guaranteed) {
  if (provenance.empty()) raise(Errc::domain_error, "bound reports need a provenance");
  BoundReport r;
  r.name = std::move(name);
  r.subject = std::move(subject);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = rel;
  r.tolerance = tolerance;
  r.provenance = std::move(provenance);
  r.guaranteed = guaranteed;
  r.slack = signed_slack(lhs, rel, rhs);
  // inf >= finite gives slack inf; inf >= inf (NaN) counts as holding
  if (std::isnan(r.slack) && lhs == rhs) r.slack = 0.0;
  r.satisfied = r.slack >= -tolerance;
  if (!guaranteed) {
    r.status = Status::informational;
  } else {
    r.status = r.satisfied ? Status::satisfied : Status::violated;
  }
  return r;
}

BoundReport not_applicable(std::string name, std::string subject, std::string provenance, std::string reason) {
  BoundReport r;
  r.name = std::move(name);
  r.subject = std::move(subject);
  r.lhs = std::nan("");
  r.rhs = std::nan("");
  r.slack = std::nan("");
  r.provenance = std::move(provenance);
  r.note = std::move(reason);
  r.status = Status::not_applicable;
  return r;
}

}  // namespace etu

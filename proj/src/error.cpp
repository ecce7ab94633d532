#include "etu/error.hpp"

namespace etu {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::non_convergence: return "NonConvergence";
    case Errc::domain_error: return "DomainError";
    case Errc::no_sign_change: return "NoSignChange";
    case Errc::grid_too_short: return "GridTooShort";
    case Errc::infinite_variance: return "InfiniteVariance";
    case Errc::non_uniform_grid: return "NonUniformGrid";
    case Errc::zero_at_origin: return "ZeroAtOrigin";
    case Errc::no_crossing: return "NoCrossing";
    case Errc::divergent: return "Divergent";
    case Errc::level_not_reached: return "LevelNotReached";
    case Errc::bound_inapplicable: return "BoundInapplicable";
    case Errc::not_reached: return "NotReached";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::p_out_of_range: return "POutOfRange";
    case Errc::moment_divergent: return "MomentDivergent";
    case Errc::negative_variance: return "NegativeVariance";
    case Errc::invalid_state: return "InvalidState";
    case Errc::zero_dispersion: return "ZeroDispersion";
    case Errc::nonzero_at_origin: return "NonzeroAtOrigin";
    case Errc::unknown_bound_name: return "UnknownBoundName";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace etu

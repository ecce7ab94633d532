#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace etu {

enum class Errc {
  non_convergence,
  domain_error,
  no_sign_change,
  grid_too_short,
  infinite_variance,
  non_uniform_grid,
  zero_at_origin,
  no_crossing,
  divergent,
  level_not_reached,
  bound_inapplicable,
  not_reached,
  not_applicable,
  p_out_of_range,
  moment_divergent,
  negative_variance,
  invalid_state,
  zero_dispersion,
  nonzero_at_origin,
  unknown_bound_name,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

// Single exception type for every numerical or contract failure in the
// library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace etu

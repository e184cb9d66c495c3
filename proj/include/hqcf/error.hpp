#pragma once

#include <stdexcept>
#include <string>

namespace hqcf {

enum class ErrorCode {
  invalid_argument,
  not_prime,
  rational_not_embeddable,
  division_by_zero,
  gcd_undefined,
  non_integrable_monomial,
  degenerate_scaling,
  not_in_base_field,
  not_a_rational_function,
  scalar_cf_undefined,
  hypothesis_broken,
  excluded_by_hypothesis,
  delta_undefined,
  not_perfect_spec,
  internal_contradiction,
  insufficient_expansion,
  wrong_residue_class,
  derivation_inapplicable,
  pattern_mismatch,
  parse_error,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported through this type; `code()` lets callers
// tell apart failures that the mathematics distinguishes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hqcf

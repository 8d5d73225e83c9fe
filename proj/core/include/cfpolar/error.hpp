// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_ERROR_HPP
#define CFPOLAR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfpolar
{

enum class ErrorCode
{
  not_positive_definite,
  dim_unsupported,
  dim_mismatch,
  complex_roots,
  resolvent_complex,
  no_root_in_bracket,
  cross_check_failed,
  branch_ambiguous,
  spurious_collision,
  d12_degenerate,
  near_singular,
  singular_f,
  no_convergence,
  degenerate_spectrum,
  parse_error,
};

/// Stable machine-readable name, e.g. "NotPositiveDefinite".
std::string_view error_name(ErrorCode code);

/// True for errors caused by the caller's input rather than by the numerics.
bool is_validation_error(ErrorCode code);

class Error : public std::runtime_error
{
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cfpolar

#endif

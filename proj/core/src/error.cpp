// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/error.hpp"

namespace cfpolar
{

std::string_view error_name(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::not_positive_definite: return "NotPositiveDefinite";
    case ErrorCode::dim_unsupported: return "DimUnsupported";
    case ErrorCode::dim_mismatch: return "DimMismatch";
    case ErrorCode::complex_roots: return "ComplexRoots";
    case ErrorCode::resolvent_complex: return "ResolventComplex";
    case ErrorCode::no_root_in_bracket: return "NoRootInBracket";
    case ErrorCode::cross_check_failed: return "CrossCheckFailed";
    case ErrorCode::branch_ambiguous: return "BranchAmbiguous";
    case ErrorCode::spurious_collision: return "SpuriousCollision";
    case ErrorCode::d12_degenerate: return "D12Degenerate";
    case ErrorCode::near_singular: return "NearSingular";
    case ErrorCode::singular_f: return "SingularF";
    case ErrorCode::no_convergence: return "NoConvergence";
    case ErrorCode::degenerate_spectrum: return "DegenerateSpectrum";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::not_positive_definite:
    case ErrorCode::dim_unsupported:
    case ErrorCode::dim_mismatch:
    case ErrorCode::singular_f:
    case ErrorCode::parse_error:
      return true;
    default:
      return false;
  }
}

}  // namespace cfpolar

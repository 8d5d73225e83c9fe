// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLI_PARSE_HPP
#define CFPOLAR_CLI_PARSE_HPP

#include "cfpolar/tensor.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace cfpolar::cli
{

/// Asymmetry max|a_ij - a_ji| tolerated without a warning, relative to ||A||_F.
inline constexpr double kSilentAsymmetry = 1e-6;

/**
 * A square matrix from JSON ({"dim": n, "rows": [[...], ...]}, detected by a leading '{')
 * or CSV (n lines of n comma-separated reals; ';' also ends a row).
 * Throws ParseError carrying line and column, DimUnsupported outside 2..6, and
 * DimMismatch for ragged rows or a disagreement with expected_dim.
 */
Matrix parse_matrix(std::string_view text, std::optional<int> expected_dim = std::nullopt);

struct SymmetrizedInput
{
  SymTensor c;
  /// max|a_ij - a_ji| of the raw input.
  double symmetrization_delta = 0.0;
  /// True when the delta exceeds kSilentAsymmetry ||A||_F.
  bool warn = false;
};

/// (A + A^T) / 2, checked positive definite (throws NotPositiveDefinite).
SymmetrizedInput symmetrize(const Matrix& a);

/// Whole stream or file contents; "-" reads standard input. Throws ParseError if unreadable.
std::string read_input(const std::string& path, std::istream& stdin_stream);

}  // namespace cfpolar::cli

#endif

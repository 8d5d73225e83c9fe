// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLI_SELFTEST_HPP
#define CFPOLAR_CLI_SELFTEST_HPP

#include <string>
#include <vector>

namespace cfpolar::cli
{

struct SelftestCase
{
  std::string name;
  double expected = 0.0;
  double got = 0.0;
  /// Relative error for anchored values, the residual itself for residual rows.
  double error = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/**
 * Deterministic regression table: the dimension-6 factor-table roots, the dimension-5
 * integer-stretch root, the dimension-3 quartic catalogs and seeded round-trip residuals
 * for every dimension. Numerical failures are recorded as failing rows, never thrown.
 */
std::vector<SelftestCase> run_selftest();

}  // namespace cfpolar::cli

#endif

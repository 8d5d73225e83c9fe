// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/selftest.hpp"

#include "cfpolar/cli/bench.hpp"
#include "cfpolar/error.hpp"
#include "cfpolar/high_dim.hpp"
#include "cfpolar/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <sstream>
#include <vector>

namespace cfpolar::cli
{

namespace
{
  std::string label(const std::string& prefix, const std::vector<double>& l)
  {
    std::ostringstream out;
    out << prefix << " lambda=(";
    for (std::size_t k = 0; k < l.size(); ++k) out << (k ? "," : "") << l[k];
    out << ")";
    return out.str();
  }

  BasicPrincipalInvariants<quad> quad_invariants(const std::vector<double>& l)
  {
    std::vector<quad> q(l.begin(), l.end());
    return invariants_from_stretches(BasicStretches<quad>(std::span<const quad>(q)));
  }

  SelftestCase anchored(std::string name, double expected, double tol, const std::function<double()>& compute)
  {
    SelftestCase row{std::move(name), expected, 0.0, 0.0, tol, false};
    try
    {
      row.got = compute();
      row.error = std::abs(row.got - expected) / std::max(std::abs(expected), 1.0);
      row.pass = row.error <= tol;
    }
    catch (const Error&)
    {
      row.got = std::nan("");
      row.error = std::numeric_limits<double>::infinity();
    }
    return row;
  }

  /// Largest |root_k - want_k| over a descending catalog.
  double catalog_error(const RootSet<double>& got, const std::vector<double>& want)
  {
    if (got.size() != static_cast<int>(want.size())) return std::numeric_limits<double>::infinity();
    double e = 0.0;
    for (int k = 0; k < got.size(); ++k) e = std::max(e, std::abs(got[k] - want[static_cast<std::size_t>(k)]));
    return e;
  }
}  // namespace

std::vector<SelftestCase> run_selftest()
{
  std::vector<SelftestCase> rows;

  const std::vector<std::pair<std::vector<double>, double>> factor_table{{{1, 1, 1, 1, 1, 1}, 36.0},
      {{1, 2, 3, 4, 5, 6}, 441.0}, {{1, 2, 3, 5, 6, 7}, 576.0}, {{1, 2, 4, 5, 7, 8}, 729.0}, {{1, 1, 1, 2, 5, 7}, 289.0}};
  for (const auto& [l, w] : factor_table)
    rows.push_back(anchored(label("dim6 largest root w", l), w, 1e-6, [&l] {
      const quad i1 = n6_stretch_invariants(quad_invariants(l))(1);
      return static_cast<double>(i1 * i1);
    }));

  rows.push_back(anchored(label("dim5 largest root i1", {5, 4, 3, 2, 1}), 15.0, 1e-8,
      [] { return static_cast<double>(n5_stretch_invariants(quad_invariants({5, 4, 3, 2, 1}))(1)); }));

  const auto inv3 = PrincipalInvariants::from_values({14, 49, 36});
  rows.push_back(anchored("dim3 i1 quartic catalog (6,0,-2,-4)", 0.0, 1e-10,
      [&] { return catalog_error(n3_quartic_cross_check(inv3).i1_roots, {6, 0, -2, -4}); }));
  rows.push_back(anchored("dim3 i2 quartic catalog (11,1,-5,-7)", 0.0, 1e-10,
      [&] { return catalog_error(n3_quartic_cross_check(inv3).i2_roots, {11, 1, -5, -7}); }));

  for (int n = 2; n <= 6; ++n)
  {
    const double tol = n <= 4 ? 1e-9 : 1e-7;
    rows.push_back(anchored("dim" + std::to_string(n) + " round trip max ||U^2-C||/||C|| (20 seeded, cond 1e6)", 0.0, tol,
        [n] {
          BenchOptions options;
          options.dim = n;
          options.batch = 20;
          const std::vector<Matrix> batch = bench_batch(options);
          double worst = 0.0;
          for (const Matrix& f : batch)
          {
            const SymTensor c = gram(f);
            const RightStretch r = right_stretch(c);
            worst = std::max(worst, (r.u * r.u - c.full()).frobenius_norm() / c.frobenius_norm());
          }
          return worst;
        }));
  }
  return rows;
}

}  // namespace cfpolar::cli

// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/closed_form.hpp"
#include "cfpolar/error.hpp"
#include "cfpolar/oracle/spectral.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace cfpolar;
using namespace cfpolar::testing;

namespace
{

void expect_values(const StretchInvariants& got, std::initializer_list<double> want, double tol)
{
  ASSERT_EQ(got.dim, static_cast<int>(want.size()));
  int k = 1;
  for (double w : want)
  {
    EXPECT_LE(relative_error(got(k), w), tol) << "i_" << k << " = " << got(k);
    ++k;
  }
}

void expect_roots(const RootSet<double>& got, std::initializer_list<double> want, double tol)
{
  ASSERT_EQ(got.size(), static_cast<int>(want.size()));
  int k = 0;
  for (double w : want) EXPECT_NEAR(got[k++], w, tol) << "root " << k;
}

StretchInvariants closed_form(const PrincipalInvariants& inv)
{
  switch (inv.dim)
  {
    case 2: return n2_stretch_invariants(inv);
    case 3: return n3_stretch_invariants(inv);
    default: return n4_stretch_invariants(inv);
  }
}

std::array<double, kMaxDim> symmetric_functions(const std::vector<double>& l)
{
  return elementary_symmetric<double>(std::span<const double>(l));
}

}  // namespace

TEST(TwoStretch, Identity)
{
  const auto i = n2_stretch_invariants(PrincipalInvariants::from_values({2, 1}));
  expect_values(i, {2, 1}, 1e-15);
  EXPECT_EQ(i.route, Route::closed2);
}

TEST(TwoStretch, Diagonal)
{
  expect_values(n2_stretch_invariants(PrincipalInvariants::from_values({5, 4})), {3, 2}, 1e-15);
}

TEST(TwoStretch, MatchesOracleOnRandomTensors)
{
  std::mt19937_64 rng(kDefaultSeed);
  for (int trial = 0; trial < 100; ++trial)
  {
    const SymTensor c = spd_with_stretches(uniform_stretches(2, rng, 0.5, 3.0), rng);
    const auto eig = oracle::jacobi_eigen(c);
    const double l1 = std::sqrt(eig.values[0]), l2 = std::sqrt(eig.values[1]);
    const auto i = n2_stretch_invariants(invariants_from_tensor(c));
    EXPECT_LE(relative_error(i(1), l1 + l2), 1e-12);
    EXPECT_LE(relative_error(i(2), l1 * l2), 1e-12);
    EXPECT_LE(relative_error(i(1) * i(1), c.trace() + 2.0 * i(2)), 1e-12);
  }
}

TEST(ThreeStretch, IdentityTakesDegenerateBranch)
{
  const auto i = n3_stretch_invariants(PrincipalInvariants::from_values({3, 3, 1}));
  expect_values(i, {3, 3, 1}, 1e-15);
  EXPECT_TRUE(i.degenerate);
}

TEST(ThreeStretch, Diagonal)
{
  const auto i = n3_stretch_invariants(PrincipalInvariants::from_values({14, 49, 36}));
  expect_values(i, {6, 11, 6}, 1e-14);
  EXPECT_FALSE(i.degenerate);
  EXPECT_EQ(i.route, Route::closed3);
}

TEST(ThreeStretch, TakesLargerOfTwoPositiveQuarticRoots)
{
  const auto inv = invariants_from_stretches(Stretches{10.0, 1.0, 1.0});
  const auto i = n3_stretch_invariants(inv);
  EXPECT_LE(relative_error(i(1), 12.0), 1e-14);
  const auto roots = solve_reduced_quartic(n3_i1_quartic(inv));
  // 2 lambda_1 - i_1 = 8 is also a positive root
  EXPECT_EQ(roots.multiplicity(8.0, 1e-9), 1);
  EXPECT_EQ(roots.largest(), roots[0]);
  EXPECT_NEAR(roots[0], 12.0, 1e-12);
}

TEST(QuarticCrossCheck, StretchCatalogs)
{
  const auto check = n3_quartic_cross_check(PrincipalInvariants::from_values({14, 49, 36}));
  expect_roots(check.i1_roots, {6, 0, -2, -4}, 1e-10);
  expect_roots(check.i2_roots, {11, 1, -5, -7}, 1e-10);
}

TEST(QuarticCrossCheck, Identity)
{
  const auto check = n3_quartic_cross_check(PrincipalInvariants::from_values({3, 3, 1}));
  expect_roots(check.i1_roots, {3, -1, -1, -1}, 1e-7);
}

TEST(QuarticCrossCheck, SecondCoefficientUsesFirstInvariant)
{
  const auto inv = PrincipalInvariants::from_values({14, 49, 36});
  const auto quartic = n3_i1_quartic(inv);
  EXPECT_EQ(quartic.p, -2.0 * inv(1));
  const auto eval = [](double p, double q, double r, double y) { return y * y * y * y + p * y * y + q * y + r; };
  EXPECT_EQ(eval(quartic.p, quartic.q, quartic.r, 6.0), 0.0);
  EXPECT_EQ(eval(-2.0 * inv(2), quartic.q, quartic.r, 6.0), -2520.0);
}

TEST(QuarticCrossCheck, LargestRootIsStretchInvariant)
{
  std::mt19937_64 rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 200; ++trial)
  {
    const auto inv = invariants_from_stretches(to_stretches(uniform_stretches(3, rng, 0.1, 10.0)));
    const auto i = n3_stretch_invariants(inv);
    const auto check = n3_quartic_cross_check(inv);
    for (double r : check.i1_roots) EXPECT_LE(r, i(1) * (1.0 + 1e-10));
    EXPECT_LE(relative_error(check.i1_roots.largest(), i(1)), 1e-10);
    EXPECT_LE(relative_error(check.i2_roots.largest(), i(2)), 1e-10);
  }
}

TEST(FourStretch, Identity)
{
  const auto inv = PrincipalInvariants::from_values({4, 6, 4, 1});
  expect_values(n4_stretch_invariants(inv), {4, 6, 4, 1}, 1e-14);
  expect_roots(n4_resolvent_roots(inv), {4, 4, 4}, 1e-12);
}

TEST(FourStretch, OneDistinctStretch)
{
  const auto inv = PrincipalInvariants::from_values({7, 15, 13, 4});
  const auto i = n4_stretch_invariants(inv);
  expect_values(i, {5, 9, 7, 2}, 1e-14);
  EXPECT_EQ(i.route, Route::closed4);
  expect_roots(n4_resolvent_roots(inv), {9, 9, 9}, 1e-12);
}

TEST(FourStretch, MatchesOracleOnDiagonal)
{
  const SymTensor c = SymTensor::diagonal({16.0, 9.0, 4.0, 1.0});
  const auto eig = oracle::jacobi_eigen(c);
  std::vector<double> l;
  for (int k = 0; k < 4; ++k) l.push_back(std::sqrt(eig.values[static_cast<std::size_t>(k)]));
  const auto want = symmetric_functions(l);
  const auto i = n4_stretch_invariants(invariants_from_tensor(c));
  for (int k = 1; k <= 4; ++k) EXPECT_LE(relative_error(i(k), want[static_cast<std::size_t>(k - 1)]), 1e-11);
}

TEST(FourStretch, LargestResolventRootIsPairedProduct)
{
  std::mt19937_64 rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 200; ++trial)
  {
    const auto l = uniform_stretches(4, rng, 0.1, 10.0);
    const auto roots = n4_resolvent_roots(invariants_from_stretches(to_stretches(l)));
    const double pair = l[0] * l[1] + l[2] * l[3];
    EXPECT_LE(relative_error(roots.largest(), pair * pair), 1e-10);
  }
}

TEST(FourStretch, SecondInvariantQuarticCatalog)
{
  std::mt19937_64 rng(kDefaultSeed + 3);
  for (int trial = 0; trial < 100; ++trial)
  {
    const auto l = uniform_stretches(4, rng, 0.1, 10.0);
    const auto got = solve_reduced_quartic(n4_i2_quartic(invariants_from_stretches(to_stretches(l))));
    const auto want = oracle::sign_catalog_roots(to_stretches(l));
    ASSERT_EQ(want.size(), 4U);
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(got[k], want[static_cast<std::size_t>(k)], 1e-9 * want[0]);
  }
}

TEST(ClosedForm, RoundTripFromStretches)
{
  std::mt19937_64 rng(kDefaultSeed + 4);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 500; ++trial)
    {
      const auto l = uniform_stretches(n, rng, 0.1, 10.0);
      const auto inv = invariants_from_stretches(to_stretches(l));
      const auto i = closed_form(inv);
      const auto want = symmetric_functions(l);
      for (int k = 1; k <= n; ++k)
        EXPECT_LE(relative_error(i(k), want[static_cast<std::size_t>(k - 1)]), 1e-9) << "n=" << n << " i_" << k;
      EXPECT_LE(identity_system_residual(inv, i.view()), 1e-11) << "n=" << n;
      EXPECT_EQ(i(n), std::sqrt(inv(n)));
    }
}

TEST(ClosedForm, RejectsInvalidInvariants)
{
  EXPECT_THROW(n3_stretch_invariants(PrincipalInvariants::from_values({14, 49})), Error);
  EXPECT_THROW(n4_stretch_invariants(PrincipalInvariants::from_values({4, -6, 4, 1})), Error);
  EXPECT_THROW(n2_stretch_invariants(PrincipalInvariants::from_values({0, 1})), Error);
}

// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/error.hpp"
#include "cfpolar/oracle/spectral.hpp"
#include "cfpolar/reconstruction.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace cfpolar;
using namespace cfpolar::testing;

namespace
{

double residual_tol(int n) { return n <= 4 ? 1e-9 : 1e-7; }

template <RealScalar Real>
Real nu_of(const std::vector<double>& l)
{
  std::vector<Real> q(l.begin(), l.end());
  const auto inv = invariants_from_stretches(BasicStretches<Real>(std::span<const Real>(q)));
  return nu(stretch_invariants(inv), inv);
}

double nu_in_working_precision(const std::vector<double>& l)
{
  switch (working_precision(static_cast<int>(l.size())))
  {
    case Precision::binary64: return nu_of<double>(l);
    case Precision::extended80: return static_cast<double>(nu_of<long double>(l));
    default: return static_cast<double>(nu_of<quad>(l));
  }
}

template <class Fn>
void expect_error(Fn&& fn, ErrorCode code)
{
  try
  {
    fn();
    FAIL() << "expected " << error_name(code);
  }
  catch (const Error& e)
  {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Nu, EqualStretchProducts)
{
  EXPECT_DOUBLE_EQ(nu_of<double>({1, 1, 1}), 8.0);
  EXPECT_DOUBLE_EQ(nu_of<double>({1, 1, 1, 1}), 64.0);
}

TEST(Nu, SixIntegerStretches)
{
  const double want = 3.0 * 4 * 5 * 6 * 7 * 5 * 6 * 7 * 8 * 7 * 8 * 9 * 9 * 10 * 11;
  EXPECT_EQ(want, nu_product({1, 2, 3, 4, 5, 6}));
  EXPECT_LE(relative_error(nu_in_working_precision({6, 5, 4, 3, 2, 1}), want), 1e-12);
}

TEST(Nu, MatchesProductFormEveryDimension)
{
  std::mt19937_64 rng(kDefaultSeed);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 100; ++trial)
    {
      const auto l = random_stretches(n, rng, 1e2);
      EXPECT_LE(relative_error(nu_in_working_precision(l), nu_product(l)), 1e-9) << "n=" << n;
    }
}

TEST(Nu, NearSingularIsReported)
{
  // i1 i2 - i3 = 0: no SPD tensor has these invariants, but nu must still refuse them
  const BasicStretchInvariants<double> i{3, {2.0, 1.0, 2.0, 0, 0, 0}, Route::closed3};
  const auto inv = PrincipalInvariants::from_values({2.0, 1.0, 4.0});
  expect_error([&] { nu(i, inv); }, ErrorCode::near_singular);
}

TEST(SquareRoot, TwoByTwoDiagonal)
{
  const RightStretch r = right_stretch(SymTensor::diagonal({4.0, 1.0}));
  EXPECT_NEAR(r.u(0, 0), 2.0, 1e-15);
  EXPECT_NEAR(r.u(1, 1), 1.0, 1e-15);
  EXPECT_NEAR(r.uinv(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(r.uinv(1, 1), 1.0, 1e-15);
  EXPECT_EQ(r.u(0, 1), 0.0);
}

TEST(SquareRoot, ThreeByThreeDiagonal)
{
  const RightStretch r = right_stretch(SymTensor::diagonal({9.0, 4.0, 1.0}));
  EXPECT_LE(relative_frobenius(r.u, SymTensor::diagonal({3.0, 2.0, 1.0})), 1e-15);
  EXPECT_LE(relative_frobenius(r.uinv, SymTensor::diagonal({1.0 / 3.0, 0.5, 1.0})), 1e-15);
  EXPECT_EQ(r.stretch_invariants.route, Route::closed3);
}

TEST(SquareRoot, SixByRotatedIntegerSpectrum)
{
  std::mt19937_64 rng(kDefaultSeed + 1);
  const SymTensor c = spd_with_stretches({6, 5, 4, 3, 2, 1}, rng);
  const RightStretch r = right_stretch(c);
  const auto eig = oracle::jacobi_eigen(r.u);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(eig.values[static_cast<std::size_t>(k)], 6.0 - k, 1e-9);
  EXPECT_EQ(r.stretch_invariants.route, Route::poly32_n6);
  EXPECT_EQ(r.precision, Precision::binary128);
}

TEST(SquareRoot, FiveByFiveInverseMatchesOracle)
{
  std::mt19937_64 rng(kDefaultSeed + 2);
  for (int trial = 0; trial < 20; ++trial)
  {
    const SymTensor c = spd_with_stretches(random_stretches(5, rng, 1e2), rng);
    EXPECT_LE(relative_frobenius(right_stretch(c).uinv, oracle::spectral_inverse_sqrt(c)), 1e-8);
  }
}

TEST(SquareRoot, RandomPropertiesEveryDimension)
{
  std::mt19937_64 rng(kDefaultSeed + 3);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 100; ++trial)
    {
      const SymTensor c = spd_with_stretches(random_stretches(n, rng, 1e3), rng);
      const RightStretch r = right_stretch(c);
      const double tol = residual_tol(n);
      EXPECT_LE(relative_frobenius(r.u * r.u, c), tol) << "n=" << n;
      EXPECT_LE(relative_frobenius(r.u * r.uinv, Matrix::identity(n)) / std::sqrt(double(n)), tol) << "n=" << n;
      // U is a polynomial in C
      const Matrix uc = r.u * c, cu = c * r.u;
      EXPECT_LE((uc - cu).frobenius_norm(), 1e-10 * c.frobenius_norm() * r.u.frobenius_norm()) << "n=" << n;
      EXPECT_GT(oracle::jacobi_eigen(r.u).values[static_cast<std::size_t>(n - 1)], 0.0);
    }
}

TEST(SquareRoot, ScaleInvariant)
{
  std::mt19937_64 rng(kDefaultSeed + 4);
  for (int n = 2; n <= 6; ++n)
  {
    const auto l = uniform_stretches(n, rng, 0.5, 2.0);
    const SymTensor c = spd_with_stretches(l, rng);
    const RightStretch small = right_stretch(c * 1e-6);
    const RightStretch large = right_stretch(c * 1e6);
    EXPECT_LE(relative_frobenius(small.u * 1e3, large.u * 1e-3), residual_tol(n)) << "n=" << n;
  }
}

TEST(SquareRoot, RejectsIndefinite)
{
  expect_error([] { right_stretch(SymTensor::diagonal({1.0, -1.0, 2.0})); }, ErrorCode::not_positive_definite);
}

TEST(Polar, Identity)
{
  const PolarFactors p = polar_decompose(Matrix::identity(3));
  EXPECT_LE(relative_frobenius(p.u, SymTensor::identity(3)), 1e-15);
  EXPECT_LE(relative_frobenius(p.r, Matrix::identity(3)), 1e-15);
}

TEST(Polar, PlaneRotation)
{
  const double a = std::numbers::pi / 6.0;
  Matrix f(2);
  f(0, 0) = std::cos(a);
  f(0, 1) = -std::sin(a);
  f(1, 0) = std::sin(a);
  f(1, 1) = std::cos(a);
  const PolarFactors p = polar_decompose(f);
  EXPECT_LE(relative_frobenius(p.u, SymTensor::identity(2)), 1e-14);
  EXPECT_LE(relative_frobenius(p.r, f), 1e-14);
}

TEST(Polar, RandomSixBySixMatchesOracle)
{
  std::mt19937_64 rng(kDefaultSeed + 5);
  int checked = 0;
  while (checked < 20)
  {
    const Matrix f = random_matrix(6, rng);
    if (std::abs(determinant(f)) < 1e-2) continue;
    const PolarFactors p = polar_decompose(f);
    const auto eig = oracle::jacobi_eigen(gram(f));
    std::vector<double> l;
    for (int k = 0; k < 6; ++k) l.push_back(std::sqrt(eig.values[static_cast<std::size_t>(k)]));
    const auto want = elementary_symmetric<double>(std::span<const double>(l));
    for (int k = 1; k <= 6; ++k)
      EXPECT_LE(relative_error(p.stretch_invariants(k), want[static_cast<std::size_t>(k - 1)]), 1e-8) << "i_" << k;
    ++checked;
  }
}

TEST(Polar, RotationValidity)
{
  std::mt19937_64 rng(kDefaultSeed + 6);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 50; ++trial)
    {
      const Matrix q = random_rotation(n, rng);
      const SymTensor u = spd_with_stretches(random_stretches(n, rng, 1e2), rng);
      const Matrix f = q * u;
      const PolarFactors p = polar_decompose(f);
      const Matrix rtr = p.r.transpose() * p.r;
      EXPECT_LE((rtr - Matrix::identity(n)).frobenius_norm(), 1e-9) << "n=" << n;
      EXPECT_GT(determinant(p.r), 0.0);
      EXPECT_LE(relative_frobenius(p.r * p.u, f), residual_tol(n)) << "n=" << n;
      EXPECT_LE(relative_frobenius(p.r, q), 1e-7) << "n=" << n;
    }
}

TEST(Polar, NegativeDeterminantGivesImproperRotation)
{
  Matrix f = Matrix::identity(3);
  f(2, 2) = -2.0;
  const PolarFactors p = polar_decompose(f);
  EXPECT_LT(determinant(p.r), 0.0);
  EXPECT_LE(relative_frobenius(p.u, SymTensor::diagonal({1.0, 1.0, 2.0})), 1e-14);
}

TEST(Polar, RejectsSingular)
{
  Matrix f = Matrix::identity(4);
  f(3, 3) = 0.0;
  expect_error([&] { polar_decompose(f); }, ErrorCode::singular_f);
}

TEST(Coefficients, TwoDimensionalFormula)
{
  const auto inv = PrincipalInvariants::from_values({5, 4});
  const auto i = stretch_invariants(inv);
  const auto c = sqrt_coefficients(i, inv);
  // U = (C + i2 I) / i1
  EXPECT_NEAR(c[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(c[1], 1.0 / 3.0, 1e-15);
}

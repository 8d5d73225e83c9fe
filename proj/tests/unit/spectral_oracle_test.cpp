// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/error.hpp"
#include "cfpolar/oracle/spectral.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace cfpolar;
using namespace cfpolar::oracle;
using namespace cfpolar::testing;

namespace
{

void expect_catalog(const std::vector<double>& got, const std::vector<double>& want, double tol)
{
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], tol) << "entry " << k;
}

Matrix reconstruct(const EigenPairs& eig)
{
  Matrix out(eig.dim);
  for (int i = 0; i < eig.dim; ++i)
    for (int j = 0; j < eig.dim; ++j)
    {
      double s = 0.0;
      for (int k = 0; k < eig.dim; ++k) s += eig.vectors(i, k) * eig.values[static_cast<std::size_t>(k)] * eig.vectors(j, k);
      out(i, j) = s;
    }
  return out;
}

SymTensor random_symmetric(int n, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTensor a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) a.set(i, j, u(rng));
  return a;
}

}  // namespace

TEST(JacobiEigen, DiagonalIsAxisPermutation)
{
  const auto eig = jacobi_eigen(SymTensor::diagonal({1.0, 9.0, 4.0}));
  EXPECT_EQ(eig.values[0], 9.0);
  EXPECT_EQ(eig.values[1], 4.0);
  EXPECT_EQ(eig.values[2], 1.0);
  EXPECT_EQ(eig.vectors(1, 0), 1.0);
  EXPECT_EQ(eig.vectors(2, 1), 1.0);
  EXPECT_EQ(eig.vectors(0, 2), 1.0);
}

TEST(JacobiEigen, TwoByTwoAnalytic)
{
  SymTensor a(2);
  a.set(0, 0, 2.0);
  a.set(0, 1, 1.0);
  a.set(1, 1, 2.0);
  const auto eig = jacobi_eigen(a);
  EXPECT_NEAR(eig.values[0], 3.0, 1e-15);
  EXPECT_NEAR(eig.values[1], 1.0, 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(eig.vectors(0, 0), h, 1e-15);
  EXPECT_NEAR(eig.vectors(1, 0), h, 1e-15);
  EXPECT_NEAR(eig.vectors(0, 1), h, 1e-15);
  EXPECT_NEAR(eig.vectors(1, 1), -h, 1e-15);
}

TEST(JacobiEigen, RandomSymmetricReconstruction)
{
  std::mt19937_64 rng(kDefaultSeed);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 50; ++trial)
    {
      const SymTensor a = random_symmetric(n, rng);
      const auto eig = jacobi_eigen(a);
      EXPECT_LE(relative_frobenius(reconstruct(eig), a), 1e-11);
      const Matrix vtv = eig.vectors.transpose() * eig.vectors;
      EXPECT_LE((vtv - Matrix::identity(n)).frobenius_norm(), 1e-12);
      for (int k = 0; k < n; ++k)
      {
        const double mu = eig.values[static_cast<std::size_t>(k)];
        double r = 0.0;
        for (int i = 0; i < n; ++i)
        {
          double s = -mu * eig.vectors(i, k);
          for (int j = 0; j < n; ++j) s += a(i, j) * eig.vectors(j, k);
          r += s * s;
        }
        EXPECT_LE(std::sqrt(r), 1e-11 * a.frobenius_norm());
        if (k > 0) EXPECT_LE(mu, eig.values[static_cast<std::size_t>(k - 1)]);
      }
    }
}

TEST(SpectralSqrt, Identity)
{
  EXPECT_LE(relative_frobenius(spectral_sqrt(SymTensor::identity(4)), SymTensor::identity(4)), 1e-15);
}

TEST(SpectralSqrt, Diagonal)
{
  EXPECT_LE(relative_frobenius(spectral_sqrt(SymTensor::diagonal({9.0, 4.0, 1.0})), SymTensor::diagonal({3.0, 2.0, 1.0})),
      1e-15);
}

TEST(SpectralSqrt, SquareReproducesTensor)
{
  std::mt19937_64 rng(kDefaultSeed + 1);
  for (int trial = 0; trial < 50; ++trial)
  {
    const SymTensor c = spd_with_stretches(uniform_stretches(5, rng, 0.5, 3.0), rng);
    const SymTensor u = spectral_sqrt(c);
    EXPECT_LE(relative_frobenius(u * u, c), 1e-11);
    EXPECT_LE(relative_frobenius(u * spectral_inverse_sqrt(c), Matrix::identity(5)), 1e-11);
  }
}

TEST(SpectralSqrt, RejectsIndefinite)
{
  try
  {
    spectral_sqrt(SymTensor::diagonal({1.0, -2.0}));
    FAIL() << "expected NotPositiveDefinite";
  }
  catch (const Error& e)
  {
    EXPECT_EQ(e.code(), ErrorCode::not_positive_definite);
  }
}

TEST(SpectralPolar, RecoversFactors)
{
  std::mt19937_64 rng(kDefaultSeed + 2);
  for (int n = 2; n <= 6; ++n)
  {
    const Matrix q = random_rotation(n, rng);
    const SymTensor u = spd_with_stretches(uniform_stretches(n, rng, 0.5, 3.0), rng);
    const auto p = spectral_polar(q * u);
    EXPECT_LE(relative_frobenius(p.u, u), 1e-12);
    EXPECT_LE(relative_frobenius(p.r, q), 1e-12);
  }
}

TEST(Projector, DiagonalFirstAndLast)
{
  const SymTensor c = SymTensor::diagonal({9.0, 4.0, 1.0});
  const std::array<double, 3> mu{9.0, 4.0, 1.0};
  EXPECT_LE(relative_frobenius(luehr_rubin_projector(c, 1, mu), SymTensor::diagonal({1.0, 0.0, 0.0})), 1e-15);
  EXPECT_LE(relative_frobenius(luehr_rubin_projector(c, 3, mu), SymTensor::diagonal({0.0, 0.0, 1.0})), 1e-15);
}

TEST(Projector, MatchesJacobiEigenvectors)
{
  std::mt19937_64 rng(kDefaultSeed + 3);
  for (int trial = 0; trial < 100; ++trial)
  {
    const SymTensor c = spd_with_stretches(uniform_stretches(3, rng, 0.5, 3.0), rng);
    const auto eig = jacobi_eigen(c);
    const std::array<double, 3> mu{eig.values[0], eig.values[1], eig.values[2]};
    if (mu[0] - mu[1] < 1e-3 || mu[1] - mu[2] < 1e-3) continue;
    SymTensor sum(3);
    for (int k = 1; k <= 3; ++k)
    {
      const SymTensor p = luehr_rubin_projector(c, k, mu);
      SymTensor vv(3);
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) vv.set(i, j, eig.vectors(i, k - 1) * eig.vectors(j, k - 1));
      EXPECT_LE((p - vv).frobenius_norm(), 1e-9);
      EXPECT_LE(relative_frobenius(p * p, p), 1e-9);
      sum += p;
    }
    EXPECT_LE(relative_frobenius(sum, SymTensor::identity(3)), 1e-9);
  }
}

TEST(Projector, RejectsDegenerateSpectrum)
{
  const SymTensor c = SymTensor::diagonal({4.0, 4.0, 1.0});
  try
  {
    luehr_rubin_projector(c, 1, {4.0, 4.0, 1.0});
    FAIL() << "expected DegenerateSpectrum";
  }
  catch (const Error& e)
  {
    EXPECT_EQ(e.code(), ErrorCode::degenerate_spectrum);
  }
}

TEST(SignCatalog, ThreeStretches)
{
  expect_catalog(sign_catalog_roots(Stretches{3.0, 2.0, 1.0}), {6, 0, -2, -4}, 0.0);
}

TEST(SignCatalog, FiveEqualStretches)
{
  std::vector<double> want{5};
  want.insert(want.end(), 10, 1.0);
  want.insert(want.end(), 5, -3.0);
  expect_catalog(sign_catalog_roots(Stretches{1, 1, 1, 1, 1}), want, 0.0);
}

TEST(SignCatalog, SixIntegerStretchesAsSquares)
{
  expect_catalog(sign_catalog_roots(Stretches{1, 2, 3, 4, 5, 6}),
      {441, 225, 169, 121, 121, 81, 81, 49, 49, 49, 25, 25, 9, 9, 1, 1}, 0.0);
}

TEST(SignCatalog, CountsPerDimension)
{
  std::mt19937_64 rng(kDefaultSeed + 4);
  EXPECT_EQ(sign_catalog_roots(to_stretches(uniform_stretches(3, rng, 0.5, 2.0))).size(), 4U);
  EXPECT_EQ(sign_catalog_roots(to_stretches(uniform_stretches(4, rng, 0.5, 2.0))).size(), 4U);
  EXPECT_EQ(sign_catalog_roots(to_stretches(uniform_stretches(5, rng, 0.5, 2.0))).size(), 16U);
  EXPECT_EQ(sign_catalog_roots(to_stretches(uniform_stretches(6, rng, 0.5, 2.0))).size(), 16U);
  EXPECT_THROW(sign_catalog_roots(Stretches{2.0, 1.0}), Error);
}

TEST(SignCatalog, FourStretchesFromPairedProducts)
{
  // sqrt(n) = (2+1, 2+1, 2+1) for lambda = (2, 1, 1, 1)
  expect_catalog(sign_catalog_roots(Stretches{2, 1, 1, 1}), {9, -3, -3, -3}, 0.0);
}

// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_TESTS_FIXTURES_HPP
#define CFPOLAR_TESTS_FIXTURES_HPP

#include "cfpolar/invariants.hpp"
#include "cfpolar/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace cfpolar::testing
{

inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Haar-ish random orthogonal matrix with det +1: Gram-Schmidt on a Gaussian matrix.
inline Matrix random_rotation(int n, std::mt19937_64& rng)
{
  std::normal_distribution<double> gauss;
  Matrix q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = gauss(rng);
  for (int j = 0; j < n; ++j)
  {
    for (int k = 0; k < j; ++k)
    {
      double d = 0.0;
      for (int i = 0; i < n; ++i) d += q(i, j) * q(i, k);
      for (int i = 0; i < n; ++i) q(i, j) -= d * q(i, k);
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += q(i, j) * q(i, j);
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) q(i, j) /= norm;
  }
  if (determinant(q) < 0.0)
    for (int i = 0; i < n; ++i) q(i, 0) = -q(i, 0);
  return q;
}

/// Stretches log-uniform on [scale, scale * max_ratio], sorted descending.
inline std::vector<double> random_stretches(int n, std::mt19937_64& rng, double max_ratio = 1e3, double scale = 1.0)
{
  std::uniform_real_distribution<double> u(0.0, std::log(max_ratio));
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = scale * std::exp(u(rng));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Stretches uniform on [lo, hi], sorted descending.
inline std::vector<double> uniform_stretches(int n, std::mt19937_64& rng, double lo, double hi)
{
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (auto& x : out) x = u(rng);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Q diag(values) Q^T.
inline SymTensor rotate_diagonal(const Matrix& q, const std::vector<double>& values)
{
  const int n = q.dim();
  SymTensor c(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
    {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += q(i, k) * values[static_cast<std::size_t>(k)] * q(j, k);
      c.set(i, j, s);
    }
  return c;
}

/// Q diag(stretch^2) Q^T for a random Q.
inline SymTensor spd_with_stretches(const std::vector<double>& stretches, std::mt19937_64& rng)
{
  std::vector<double> squared(stretches.size());
  std::transform(stretches.begin(), stretches.end(), squared.begin(), [](double x) { return x * x; });
  return rotate_diagonal(random_rotation(static_cast<int>(stretches.size()), rng), squared);
}

inline Stretches to_stretches(const std::vector<double>& v)
{
  return Stretches(std::span<const double>(v.data(), v.size()));
}

/// Entries uniform on [-1, 1].
inline Matrix random_matrix(int n, std::mt19937_64& rng)
{
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = u(rng);
  return m;
}

inline double relative_error(double got, double want)
{
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline Matrix to_matrix(const Matrix& m) { return m; }
inline Matrix to_matrix(const SymTensor& s) { return s.full(); }

/// ||a - b||_F / ||b||_F over full matrices.
template <class A, class B>
double relative_frobenius(const A& a, const B& b)
{
  const Matrix fa = to_matrix(a), fb = to_matrix(b);
  return (fa - fb).frobenius_norm() / fb.frobenius_norm();
}

/// prod_{i<j} (l_i + l_j).
inline double nu_product(const std::vector<double>& l)
{
  double p = 1.0;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) p *= l[a] + l[b];
  return p;
}

}  // namespace cfpolar::testing

#endif

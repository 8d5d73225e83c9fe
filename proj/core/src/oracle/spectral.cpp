// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/oracle/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace cfpolar::oracle
{

namespace
{
  constexpr int kMaxSweeps = 30;
  constexpr double kOffRatio = 1e-14;
  constexpr double kGapRatio = 1e-10;
  constexpr double kSignThreshold = 1e-12;

  double off_norm(const Matrix& a)
  {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  }

  // Rotation in the (p, q) plane that zeroes a(p, q); applied as A <- J^T A J, V <- V J.
  void rotate(Matrix& a, Matrix& v, int p, int q)
  {
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const int n = a.dim();
    for (int k = 0; k < n; ++k)
    {
      const double akp = a(k, p), akq = a(k, q);
      a(k, p) = c * akp - s * akq;
      a(k, q) = s * akp + c * akq;
    }
    for (int k = 0; k < n; ++k)
    {
      const double apk = a(p, k), aqk = a(q, k);
      a(p, k) = c * apk - s * aqk;
      a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = a(q, p) = 0.0;
    for (int k = 0; k < n; ++k)
    {
      const double vkp = v(k, p), vkq = v(k, q);
      v(k, p) = c * vkp - s * vkq;
      v(k, q) = s * vkp + c * vkq;
    }
  }

  SymTensor outer_sum(const EigenPairs& eig, const std::array<double, kMaxDim>& weights)
  {
    SymTensor out(eig.dim);
    for (int i = 0; i < eig.dim; ++i)
      for (int j = i; j < eig.dim; ++j)
      {
        double s = 0.0;
        for (int k = 0; k < eig.dim; ++k) s += weights[static_cast<std::size_t>(k)] * eig.vectors(i, k) * eig.vectors(j, k);
        out.set(i, j, s);
      }
    return out;
  }

  std::array<double, kMaxDim> positive_weights(const EigenPairs& eig, double (*f)(double))
  {
    std::array<double, kMaxDim> w{};
    for (int k = 0; k < eig.dim; ++k)
    {
      const double mu = eig.values[static_cast<std::size_t>(k)];
      if (!(mu > 0.0)) throw Error(ErrorCode::not_positive_definite, "eigenvalue is not positive");
      w[static_cast<std::size_t>(k)] = f(mu);
    }
    return w;
  }

  double inv_sqrt(double x) { return 1.0 / std::sqrt(x); }
  double plain_sqrt(double x) { return std::sqrt(x); }
}  // namespace

EigenPairs jacobi_eigen(const SymTensor& a_in)
{
  const int n = a_in.dim();
  Matrix a = a_in.full();
  Matrix v = Matrix::identity(n);
  const double target = kOffRatio * a_in.frobenius_norm();
  int sweep = 0;
  while (off_norm(a) > target)
  {
    if (++sweep > kMaxSweeps) throw Error(ErrorCode::no_convergence, "Jacobi sweep cap reached");
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::array<int, kMaxDim> order{};
  std::iota(order.begin(), order.begin() + n, 0);
  std::sort(order.begin(), order.begin() + n, [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenPairs out{n, {}, Matrix(n)};
  for (int k = 0; k < n; ++k)
  {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = a(src, src);
    double sign = 1.0;
    for (int i = 0; i < n; ++i)
      if (std::abs(v(i, src)) > kSignThreshold)
      {
        sign = v(i, src) > 0.0 ? 1.0 : -1.0;
        break;
      }
    for (int i = 0; i < n; ++i) out.vectors(i, k) = sign * v(i, src);
  }
  return out;
}

SymTensor spectral_function(const EigenPairs& eig, double (*f)(double))
{
  std::array<double, kMaxDim> w{};
  for (int k = 0; k < eig.dim; ++k) w[static_cast<std::size_t>(k)] = f(eig.values[static_cast<std::size_t>(k)]);
  return outer_sum(eig, w);
}

SymTensor spectral_sqrt(const SymTensor& c)
{
  const EigenPairs eig = jacobi_eigen(c);
  return outer_sum(eig, positive_weights(eig, plain_sqrt));
}

SymTensor spectral_inverse_sqrt(const SymTensor& c)
{
  const EigenPairs eig = jacobi_eigen(c);
  return outer_sum(eig, positive_weights(eig, inv_sqrt));
}

SpectralPolar spectral_polar(const Matrix& f)
{
  const EigenPairs eig = jacobi_eigen(gram(f));
  SpectralPolar out;
  out.u = outer_sum(eig, positive_weights(eig, plain_sqrt));
  out.uinv = outer_sum(eig, positive_weights(eig, inv_sqrt));
  out.r = f * out.uinv;
  return out;
}

SymTensor luehr_rubin_projector(const SymTensor& c, int k, const std::array<double, 3>& eigenvalues)
{
  if (c.dim() != 3) throw Error(ErrorCode::dim_mismatch, "projector formula is for 3x3 tensors");
  if (k < 1 || k > 3) throw Error(ErrorCode::dim_mismatch, "projector index must be 1, 2 or 3");
  const double gap_tol = kGapRatio * c.frobenius_norm();
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y)
      if (std::abs(eigenvalues[static_cast<std::size_t>(x)] - eigenvalues[static_cast<std::size_t>(y)]) <= gap_tol)
        throw Error(ErrorCode::degenerate_spectrum, "eigenvalues too close for the projector formula");

  const double mu_k = eigenvalues[static_cast<std::size_t>(k - 1)];
  SymTensor acc = SymTensor::identity(3);
  double denom = 1.0;
  for (int j = 1; j <= 3; ++j)
  {
    if (j == k) continue;
    const double mu_j = eigenvalues[static_cast<std::size_t>(j - 1)];
    acc = commuting_product(acc, c - SymTensor::scaled_identity(3, mu_j));
    denom *= mu_k - mu_j;
  }
  return acc * (1.0 / denom);
}

std::vector<double> sign_catalog_roots(const Stretches& s)
{
  const int n = s.dim();
  std::vector<double> out;
  if (n == 2) throw Error(ErrorCode::dim_unsupported, "no sign catalog for dimension 2");
  if (n == 4)
  {
    const double r1 = s[0] * s[1] + s[2] * s[3];
    const double r2 = s[0] * s[2] + s[1] * s[3];
    const double r3 = s[0] * s[3] + s[1] * s[2];
    out = {r1 + r2 + r3, r1 - r2 - r3, -r1 + r2 - r3, -r1 - r2 + r3};
  }
  else
  {
    for (unsigned mask = 0; mask < (1U << n); ++mask)
    {
      if (std::popcount(mask) % 2 != 0) continue;
      if (n == 6 && (mask & 1U) != 0) continue;
      double sum = 0.0;
      for (int k = 0; k < n; ++k) sum += ((mask >> k) & 1U) ? -s[k] : s[k];
      out.push_back(n == 6 ? sum * sum : sum);
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace cfpolar::oracle

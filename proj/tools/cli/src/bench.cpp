// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/cli/bench.hpp"

#include "cfpolar/oracle/spectral.hpp"
#include "cfpolar/reconstruction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>

namespace cfpolar::cli
{

namespace
{
  Matrix random_rotation(int n, std::mt19937_64& rng)
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

  double square_residual(const SymTensor& u, const SymTensor& c)
  {
    return (u * u - c.full()).frobenius_norm() / c.frobenius_norm();
  }

  template <class Fn>
  double fastest_ns_per_op(int passes, std::size_t count, Fn&& body)
  {
    double best = std::numeric_limits<double>::infinity();
    for (int p = 0; p < passes; ++p)
    {
      const auto t0 = std::chrono::steady_clock::now();
      body();
      const auto t1 = std::chrono::steady_clock::now();
      best = std::min(best, std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(count));
    }
    return best;
  }
}  // namespace

std::vector<Matrix> bench_batch(const BenchOptions& options)
{
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> log_stretch(0.0, 0.5 * std::log(options.cond));
  std::vector<Matrix> out;
  out.reserve(static_cast<std::size_t>(options.batch));
  const int n = options.dim;
  for (int b = 0; b < options.batch; ++b)
  {
    const Matrix q = random_rotation(n, rng);
    const Matrix basis = random_rotation(n, rng);
    std::array<double, kMaxDim> stretch{};
    for (int k = 0; k < n; ++k) stretch[static_cast<std::size_t>(k)] = std::exp(log_stretch(rng));
    Matrix u(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
      {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += basis(i, k) * stretch[static_cast<std::size_t>(k)] * basis(j, k);
        u(i, j) = s;
      }
    out.push_back(q * u);
  }
  return out;
}

BenchResult bench_polar(const BenchOptions& options)
{
  const std::vector<Matrix> batch = bench_batch(options);
  BenchResult out;
  out.dim = options.dim;
  out.batch = options.batch;

  std::vector<PolarFactors> closed(batch.size());
  std::vector<oracle::SpectralPolar> spectral(batch.size());
  out.closed_form_ns_per_op = fastest_ns_per_op(options.passes, batch.size(), [&] {
    for (std::size_t k = 0; k < batch.size(); ++k) closed[k] = polar_decompose(batch[k]);
  });
  out.oracle_ns_per_op = fastest_ns_per_op(options.passes, batch.size(), [&] {
    for (std::size_t k = 0; k < batch.size(); ++k) spectral[k] = oracle::spectral_polar(batch[k]);
  });
  out.speedup = out.oracle_ns_per_op / out.closed_form_ns_per_op;

  for (std::size_t k = 0; k < batch.size(); ++k)
  {
    const SymTensor c = gram(batch[k]);
    out.closed_form_max_residual = std::max(out.closed_form_max_residual, square_residual(closed[k].u, c));
    out.oracle_max_residual = std::max(out.oracle_max_residual, square_residual(spectral[k].u, c));
    out.max_disagreement =
        std::max(out.max_disagreement, (closed[k].u - spectral[k].u).frobenius_norm() / spectral[k].u.frobenius_norm());
  }
  return out;
}

}  // namespace cfpolar::cli

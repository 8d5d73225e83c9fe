// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLI_BENCH_HPP
#define CFPOLAR_CLI_BENCH_HPP

#include "cfpolar/tensor.hpp"

#include <cstdint>
#include <vector>

namespace cfpolar::cli
{

struct BenchOptions
{
  int dim = 3;
  int batch = 1000;
  std::uint64_t seed = 20240611;
  /// Stretches are log-uniform on [1, sqrt(cond)], so cond(C) <= cond.
  double cond = 1e6;
  /// Timed passes over the batch; the fastest is reported.
  int passes = 3;
};

struct BenchResult
{
  int dim = 0;
  int batch = 0;
  double closed_form_ns_per_op = 0.0;
  double oracle_ns_per_op = 0.0;
  /// oracle time / closed-form time.
  double speedup = 0.0;
  /// max ||U^2 - C||_F / ||C||_F over the batch, each path.
  double closed_form_max_residual = 0.0;
  double oracle_max_residual = 0.0;
  /// max ||U - U_oracle||_F / ||U_oracle||_F.
  double max_disagreement = 0.0;
};

/// F = Q U with Q a random rotation and U SPD with controlled stretches, reproducible from the seed.
std::vector<Matrix> bench_batch(const BenchOptions& options);

/// Times closed-form polar decomposition against the Jacobi-based oracle on the same batch.
BenchResult bench_polar(const BenchOptions& options);

}  // namespace cfpolar::cli

#endif

// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/high_dim.hpp"
#include "cfpolar/oracle/spectral.hpp"
#include "cfpolar/reconstruction.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

using namespace cfpolar;

namespace
{

constexpr int kBatch = 256;

/// Deformation gradients with stretches log-uniform on [1, 1e3], fixed seed per dimension.
std::vector<Matrix> make_batch(int n)
{
  std::mt19937_64 rng(20240611 + n);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> log_stretch(0.0, std::log(1e3));
  std::vector<Matrix> out;
  for (int b = 0; b < kBatch; ++b)
  {
    Matrix a(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
    std::vector<double> s(static_cast<std::size_t>(n));
    for (double& v : s) v = std::exp(log_stretch(rng));
    const SymTensor u = oracle::spectral_sqrt(gram(a));
    Matrix f(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) f(i, j) = (i == j ? s[static_cast<std::size_t>(i)] : 0.0) + 0.1 * a(i, j);
    out.push_back(f * u);
  }
  return out;
}

void closed_form_polar(benchmark::State& state)
{
  const auto batch = make_batch(static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(polar_decompose(batch[k]));
    k = (k + 1) % batch.size();
  }
  state.SetItemsProcessed(state.iterations());
}

void jacobi_polar(benchmark::State& state)
{
  const auto batch = make_batch(static_cast<int>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(oracle::spectral_polar(batch[k]));
    k = (k + 1) % batch.size();
  }
  state.SetItemsProcessed(state.iterations());
}

void closed_form_sqrt(benchmark::State& state)
{
  std::vector<SymTensor> batch;
  for (const Matrix& f : make_batch(static_cast<int>(state.range(0)))) batch.push_back(gram(f));
  std::size_t k = 0;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(right_stretch(batch[k]));
    k = (k + 1) % batch.size();
  }
  state.SetItemsProcessed(state.iterations());
}

void e32_evaluation(benchmark::State& state)
{
  std::vector<quad> l{6, 5, 4, 3, 2, 1};
  const auto I = invariants_from_stretches(BasicStretches<quad>(std::span<const quad>(l)));
  quad w = 400;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(n6_e32_eval(I, w));
    w += quad(1e-3);
  }
}

void n6_largest_root(benchmark::State& state)
{
  std::vector<quad> l{6, 5, 4, 3, 2, 1};
  const auto I = invariants_from_stretches(BasicStretches<quad>(std::span<const quad>(l)));
  for (auto _ : state) benchmark::DoNotOptimize(n6_stretch_invariants(I));
}

}  // namespace

BENCHMARK(closed_form_polar)->DenseRange(2, 6);
BENCHMARK(jacobi_polar)->DenseRange(2, 6);
BENCHMARK(closed_form_sqrt)->DenseRange(2, 6);
BENCHMARK(e32_evaluation);
BENCHMARK(n6_largest_root);

BENCHMARK_MAIN();

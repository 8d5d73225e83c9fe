// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_ORACLE_SPECTRAL_HPP
#define CFPOLAR_ORACLE_SPECTRAL_HPP

#include "cfpolar/invariants.hpp"
#include "cfpolar/tensor.hpp"

#include <array>
#include <vector>

/// Eigendecomposition-based ground truth. Nothing in the closed-form path depends on this.
namespace cfpolar::oracle
{

/// Eigenvalues descending; eigenvectors as the columns of `vectors`, each with its
/// first non-negligible component positive.
struct EigenPairs
{
  int dim = 0;
  std::array<double, kMaxDim> values{};
  Matrix vectors;
};

/// Cyclic Jacobi: stops once the off-diagonal norm is below 1e-14 ||A||_F; at most 30 sweeps.
/// Throws NoConvergence past the sweep cap.
EigenPairs jacobi_eigen(const SymTensor& a);

/// sum_k f(mu_k) v_k v_k^T over the eigenpairs of c.
SymTensor spectral_function(const EigenPairs& eig, double (*f)(double));

/// U = sum sqrt(mu_k) v_k v_k^T. Throws NotPositiveDefinite if an eigenvalue is not positive.
SymTensor spectral_sqrt(const SymTensor& c);

/// U^{-1} = sum mu_k^{-1/2} v_k v_k^T.
SymTensor spectral_inverse_sqrt(const SymTensor& c);

struct SpectralPolar
{
  SymTensor u;
  SymTensor uinv;
  Matrix r;
};

/// F = R U through the eigendecomposition of F^T F.
SpectralPolar spectral_polar(const Matrix& f);

/// e_k (x) e_k = prod_{j != k} (C - mu_j I) / (mu_k - mu_j) for a 3x3 C with eigenvalues mu (k is 1-based).
/// Throws DegenerateSpectrum when two eigenvalues are closer than 1e-10 ||C||_F.
SymTensor luehr_rubin_projector(const SymTensor& c, int k, const std::array<double, 3>& eigenvalues);

/**
 * Signed sums of the stretches with an even number of minus signs, descending.
 * dim 3 and 5: all such sums. dim 6: their squares over the patterns keeping +lambda_1
 * (each pattern's negation is also even). dim 4: the four i_2-quartic roots
 * +-sqrt(n1) +-sqrt(n2) +-sqrt(n3) with sqrt(n1) = l1 l2 + l3 l4 and cyclic.
 * Throws DimUnsupported for dim 2.
 */
std::vector<double> sign_catalog_roots(const Stretches& s);

}  // namespace cfpolar::oracle

#endif

// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_RECONSTRUCTION_HPP
#define CFPOLAR_RECONSTRUCTION_HPP

#include "cfpolar/closed_form.hpp"
#include "cfpolar/high_dim.hpp"
#include "cfpolar/invariants.hpp"
#include "cfpolar/tensor.hpp"

namespace cfpolar
{

/// Invariants of U from those of C, dispatched on dimension (closed form for 2..4, polynomial roots for 5, 6).
template <RealScalar Real>
BasicStretchInvariants<Real> stretch_invariants(const BasicPrincipalInvariants<Real>& I);

/// prod_{i<j} (lambda_i + lambda_j), evaluated from the invariants of U (and C).
/// Throws NearSingular when nu <= 1e3 eps i_1^{N(N-1)/2}.
template <RealScalar Real>
Real nu(const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I);

/// Coefficients c_0..c_{N-1} with U = sum c_k C^k.
template <RealScalar Real>
std::array<Real, kMaxDim> sqrt_coefficients(const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I);

/// Coefficients c_0..c_{N-1} with U^{-1} = sum c_k C^k (no inversion anywhere).
template <RealScalar Real>
std::array<Real, kMaxDim> inverse_sqrt_coefficients(
    const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I);

template <RealScalar Real>
BasicSymTensor<Real> u_from_c(
    const BasicSymTensor<Real>& c, const BasicPrincipalInvariants<Real>& I, const BasicStretchInvariants<Real>& i);

template <RealScalar Real>
BasicSymTensor<Real> uinv_from_c(
    const BasicSymTensor<Real>& c, const BasicPrincipalInvariants<Real>& I, const BasicStretchInvariants<Real>& i);

/// U, U^{-1} and the invariants behind them, rounded to double.
struct RightStretch
{
  SymTensor u;
  SymTensor uinv;
  PrincipalInvariants invariants;
  StretchInvariants stretch_invariants;
  double nu = 0.0;
  Precision precision = Precision::binary64;
};

/// Full pipeline from a double SPD tensor, carried out in working_precision(dim).
RightStretch right_stretch(const SymTensor& c);

/// Same pipeline in an explicitly chosen scalar type.
template <RealScalar Real>
RightStretch right_stretch_in(const SymTensor& c);

struct PolarFactors
{
  SymTensor u;
  SymTensor uinv;
  Matrix r;
  PrincipalInvariants invariants;
  StretchInvariants stretch_invariants;
  double nu = 0.0;
  Precision precision = Precision::binary64;
};

/// F = R U with C = F^T F. Throws SingularF when |det F| <= 1e-14 (||F||_F / sqrt(N))^N.
PolarFactors polar_decompose(const Matrix& f);

}  // namespace cfpolar

#endif

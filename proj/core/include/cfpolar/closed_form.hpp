// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_CLOSED_FORM_HPP
#define CFPOLAR_CLOSED_FORM_HPP

#include "cfpolar/invariants.hpp"
#include "cfpolar/poly_solvers.hpp"

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace cfpolar
{

/// Which procedure produced a set of stretch invariants.
enum class Route
{
  closed2,
  closed3,
  closed4,
  poly16_n5,
  poly32_n6
};

std::string_view route_name(Route route);

/// Invariants (i_1, ..., i_N) of U = C^{1/2}, with provenance.
template <RealScalar Real>
struct BasicStretchInvariants
{
  int dim = 0;
  std::array<Real, kMaxDim> values{};
  Route route = Route::closed2;
  /// Equal-root branch taken (all stretches, or all resolvent roots, coincide).
  bool degenerate = false;
  /// dim 6 only: i_4 came from the quartic because d_12 vanished at the root.
  bool quartic_fallback = false;

  Real operator()(int alpha) const noexcept { return values[static_cast<std::size_t>(alpha - 1)]; }
  std::span<const Real> view() const noexcept { return {values.data(), static_cast<std::size_t>(dim)}; }

  BasicPrincipalInvariants<Real> as_invariants() const { return {dim, values}; }

  template <RealScalar To>
  BasicStretchInvariants<To> cast() const
  {
    BasicStretchInvariants<To> out{dim, {}, route, degenerate, quartic_fallback};
    for (int k = 0; k < dim; ++k) out.values[k] = static_cast<To>(values[k]);
    return out;
  }
};

/// Throws DimMismatch unless I has exactly dim entries, NotPositiveDefinite unless all are positive and finite.
template <RealScalar Real>
void validate_invariants(const BasicPrincipalInvariants<Real>& I, int dim)
{
  if (I.dim != dim)
    throw Error(ErrorCode::dim_mismatch,
        "expected " + std::to_string(dim) + " invariants, got " + std::to_string(I.dim));
  for (int k = 1; k <= I.dim; ++k)
    if (!(I(k) > Real(0)) || !num::isfinite(I(k)))
      throw Error(ErrorCode::not_positive_definite, "invariants of an SPD tensor must be positive");
}

/**
 * Largest relative residual of the identity system linking (I) and (i):
 * I_k = sum_{j=0}^{2k} (-1)^{j+k} i_j i_{2k-j}, i_0 = 1, i_j = 0 beyond dim
 * (the coefficients of p_U(y) p_U(-y) = (-1)^N p_C(y^2)). Each row is scaled by
 * the sum of its absolute terms.
 */
template <RealScalar Real>
Real identity_system_residual(const BasicPrincipalInvariants<Real>& I, std::span<const Real> i);

template <RealScalar Real>
BasicStretchInvariants<Real> n2_stretch_invariants(const BasicPrincipalInvariants<Real>& I);

/// Largest squared stretch (theta_1 root of the characteristic cubic), dim 3.
template <RealScalar Real>
Real n3_largest_squared_stretch(const BasicPrincipalInvariants<Real>& I);

template <RealScalar Real>
BasicStretchInvariants<Real> n3_stretch_invariants(const BasicPrincipalInvariants<Real>& I);

/// y^4 - 2 I1 y^2 - 8 sqrt(I3) y + I1^2 - 4 I2, one of whose roots is i_1.
template <RealScalar Real>
QuarticReduced<Real> n3_i1_quartic(const BasicPrincipalInvariants<Real>& I);

/// z^4 - 2 I2 z^2 - 8 I3 z + I2^2 - 4 I1 I3, one of whose roots is i_2.
template <RealScalar Real>
QuarticReduced<Real> n3_i2_quartic(const BasicPrincipalInvariants<Real>& I);

template <RealScalar Real>
struct N3CrossCheck
{
  RootSet<Real> i1_roots;
  RootSet<Real> i2_roots;
};

/// Both dim-3 quartics solved by resolvent; the largest roots must reproduce
/// n3_stretch_invariants to 1e-10 relative, else CrossCheckFailed.
template <RealScalar Real>
N3CrossCheck<Real> n3_quartic_cross_check(const BasicPrincipalInvariants<Real>& I);

/// Reduced quartic in i_2 for dim 4: p = -2(I2 + 6 s), q = -8(I1 s + I3), s = sqrt(I4).
template <RealScalar Real>
QuarticReduced<Real> n4_i2_quartic(const BasicPrincipalInvariants<Real>& I);

/// Shift (I2 + 6 sqrt(I4))/3 and reduced (p, q) of the dim-4 resolvent cubic.
template <RealScalar Real>
std::pair<CubicStd<Real>, Real> n4_reduced_resolvent(const BasicPrincipalInvariants<Real>& I);

/// All three roots of the dim-4 resolvent, descending; n_1 = (l1 l2 + l3 l4)^2.
template <RealScalar Real>
RootSet<Real> n4_resolvent_roots(const BasicPrincipalInvariants<Real>& I);

template <RealScalar Real>
BasicStretchInvariants<Real> n4_stretch_invariants(const BasicPrincipalInvariants<Real>& I);

using StretchInvariants = BasicStretchInvariants<double>;

}  // namespace cfpolar

#endif

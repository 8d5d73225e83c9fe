// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/closed_form.hpp"

namespace cfpolar
{

namespace
{
  constexpr double kTripleRootRatio = 1e-14;
  constexpr double kCrossCheckTol = 1e-10;

  template <RealScalar Real>
  Real positive_sqrt(Real x)
  {
    return num::sqrt(num::max(x, Real(0)));
  }

  template <RealScalar Real>
  void require_dim(const BasicPrincipalInvariants<Real>& I, int dim)
  {
    if (I.dim != dim) throw Error(ErrorCode::dim_mismatch, "invariant count does not match the formula's dimension");
  }
}  // namespace

std::string_view route_name(Route route)
{
  switch (route)
  {
    case Route::closed2: return "closed2";
    case Route::closed3: return "closed3";
    case Route::closed4: return "closed4";
    case Route::poly16_n5: return "poly16_n5";
    case Route::poly32_n6: return "poly32_n6";
  }
  return "unknown";
}

template <RealScalar Real>
Real identity_system_residual(const BasicPrincipalInvariants<Real>& I, std::span<const Real> i)
{
  const int n = I.dim;
  auto coeff = [&](int j) -> Real {
    if (j == 0) return Real(1);
    if (j > n) return Real(0);
    return i[static_cast<std::size_t>(j - 1)];
  };
  Real worst(0);
  for (int k = 1; k <= n; ++k)
  {
    Real sum(0);
    Real scale = num::abs(I(k));
    for (int j = 0; j <= 2 * k; ++j)
    {
      const Real term = coeff(j) * coeff(2 * k - j);
      sum += ((j + k) % 2 == 0) ? term : -term;
      scale += num::abs(term);
    }
    if (scale > Real(0)) worst = num::max(worst, num::abs(I(k) - sum) / scale);
  }
  return worst;
}

template <RealScalar Real>
BasicStretchInvariants<Real> n2_stretch_invariants(const BasicPrincipalInvariants<Real>& I)
{
  validate_invariants(I, 2);
  const Real i2 = num::sqrt(I(2));
  BasicStretchInvariants<Real> out{2, {}, Route::closed2};
  out.values[0] = num::sqrt(I(1) + Real(2) * i2);
  out.values[1] = i2;
  return out;
}

template <RealScalar Real>
Real n3_largest_squared_stretch(const BasicPrincipalInvariants<Real>& I)
{
  require_dim(I, 3);
  return largest_root_trig(reduce_characteristic_cubic(I), I(1) / Real(3));
}

template <RealScalar Real>
BasicStretchInvariants<Real> n3_stretch_invariants(const BasicPrincipalInvariants<Real>& I)
{
  validate_invariants(I, 3);
  BasicStretchInvariants<Real> out{3, {}, Route::closed3};
  const Real shift = I(1) / Real(3);
  const CubicStd<Real> cubic = reduce_characteristic_cubic(I);
  if (cubic.p <= Real(kTripleRootRatio) * shift * shift)
  {
    const Real lambda = num::sqrt(shift);
    out.values = {Real(3) * lambda, Real(3) * lambda * lambda, lambda * lambda * lambda};
    out.degenerate = true;
    return out;
  }
  const Real lambda1 = num::sqrt(largest_root_trig(cubic, shift));
  const Real i3 = num::sqrt(I(3));
  // sum of the two smaller stretches
  const Real rest = positive_sqrt(I(1) - lambda1 * lambda1 + Real(2) * i3 / lambda1);
  out.values[0] = lambda1 + rest;
  out.values[1] = i3 / lambda1 + lambda1 * rest;
  out.values[2] = i3;
  return out;
}

template <RealScalar Real>
QuarticReduced<Real> n3_i1_quartic(const BasicPrincipalInvariants<Real>& I)
{
  require_dim(I, 3);
  return {Real(-2) * I(1), Real(-8) * num::sqrt(I(3)), I(1) * I(1) - Real(4) * I(2)};
}

template <RealScalar Real>
QuarticReduced<Real> n3_i2_quartic(const BasicPrincipalInvariants<Real>& I)
{
  require_dim(I, 3);
  return {Real(-2) * I(2), Real(-8) * I(3), I(2) * I(2) - Real(4) * I(1) * I(3)};
}

template <RealScalar Real>
N3CrossCheck<Real> n3_quartic_cross_check(const BasicPrincipalInvariants<Real>& I)
{
  const BasicStretchInvariants<Real> direct = n3_stretch_invariants(I);
  N3CrossCheck<Real> out{solve_reduced_quartic(n3_i1_quartic(I)), solve_reduced_quartic(n3_i2_quartic(I))};
  const Real tol = Real(kCrossCheckTol);
  if (num::abs(out.i1_roots.largest() - direct(1)) > tol * direct(1))
    throw Error(ErrorCode::cross_check_failed, "largest i1-quartic root disagrees with the direct formula");
  if (num::abs(out.i2_roots.largest() - direct(2)) > tol * direct(2))
    throw Error(ErrorCode::cross_check_failed, "largest i2-quartic root disagrees with the direct formula");
  return out;
}

template <RealScalar Real>
QuarticReduced<Real> n4_i2_quartic(const BasicPrincipalInvariants<Real>& I)
{
  require_dim(I, 4);
  const Real s = num::sqrt(I(4));
  return {Real(-2) * (I(2) + Real(6) * s), Real(-8) * (I(1) * s + I(3)),
      I(2) * I(2) - Real(4) * I(1) * I(3) - Real(4) * I(2) * s + Real(4) * I(4)};
}

template <RealScalar Real>
std::pair<CubicStd<Real>, Real> n4_reduced_resolvent(const BasicPrincipalInvariants<Real>& I)
{
  require_dim(I, 4);
  const Real I1 = I(1), I2 = I(2), I3 = I(3), I4 = I(4);
  const CubicStd<Real> cubic{(I2 * I2 - Real(3) * I1 * I3 + Real(12) * I4) / Real(3),
      (Real(2) * I2 * I2 * I2 - Real(9) * I1 * I2 * I3 + Real(27) * I1 * I1 * I4 + Real(27) * I3 * I3
          - Real(72) * I2 * I4)
          / Real(27)};
  return {cubic, (I2 + Real(6) * num::sqrt(I4)) / Real(3)};
}

template <RealScalar Real>
RootSet<Real> n4_resolvent_roots(const BasicPrincipalInvariants<Real>& I)
{
  const auto [cubic, shift] = n4_reduced_resolvent(I);
  return solve_cubic_trig(cubic, shift);
}

template <RealScalar Real>
BasicStretchInvariants<Real> n4_stretch_invariants(const BasicPrincipalInvariants<Real>& I)
{
  validate_invariants(I, 4);
  const auto [cubic, shift] = n4_reduced_resolvent(I);
  BasicStretchInvariants<Real> out{4, {}, Route::closed4};
  out.degenerate = cubic.p <= Real(kTripleRootRatio) * shift * shift;
  const Real n1 = largest_root_trig(cubic, shift);
  const Real s4 = num::sqrt(I(4));
  const Real r1 = num::sqrt(n1);
  const Real i2 = r1 + positive_sqrt(I(2) + Real(6) * s4 - n1 + Real(2) * (I(1) * s4 + I(3)) / r1);
  out.values[0] = num::sqrt(I(1) + Real(2) * i2);
  out.values[1] = i2;
  out.values[2] = num::sqrt(I(3) + Real(2) * i2 * s4);
  out.values[3] = s4;
  return out;
}

#define CFPOLAR_INSTANTIATE(Real)                                                                        \
  template Real identity_system_residual<Real>(const BasicPrincipalInvariants<Real>&, std::span<const Real>); \
  template BasicStretchInvariants<Real> n2_stretch_invariants<Real>(const BasicPrincipalInvariants<Real>&);  \
  template Real n3_largest_squared_stretch<Real>(const BasicPrincipalInvariants<Real>&);                   \
  template BasicStretchInvariants<Real> n3_stretch_invariants<Real>(const BasicPrincipalInvariants<Real>&);  \
  template QuarticReduced<Real> n3_i1_quartic<Real>(const BasicPrincipalInvariants<Real>&);                \
  template QuarticReduced<Real> n3_i2_quartic<Real>(const BasicPrincipalInvariants<Real>&);                \
  template N3CrossCheck<Real> n3_quartic_cross_check<Real>(const BasicPrincipalInvariants<Real>&);         \
  template QuarticReduced<Real> n4_i2_quartic<Real>(const BasicPrincipalInvariants<Real>&);                \
  template std::pair<CubicStd<Real>, Real> n4_reduced_resolvent<Real>(const BasicPrincipalInvariants<Real>&); \
  template RootSet<Real> n4_resolvent_roots<Real>(const BasicPrincipalInvariants<Real>&);                  \
  template BasicStretchInvariants<Real> n4_stretch_invariants<Real>(const BasicPrincipalInvariants<Real>&);

CFPOLAR_INSTANTIATE(double)
CFPOLAR_INSTANTIATE(long double)
CFPOLAR_INSTANTIATE(quad)

#undef CFPOLAR_INSTANTIATE

}  // namespace cfpolar

// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_HIGH_DIM_HPP
#define CFPOLAR_HIGH_DIM_HPP

#include "cfpolar/closed_form.hpp"
#include "cfpolar/invariants.hpp"
#include "cfpolar/poly_solvers.hpp"

#include <array>
#include <vector>

namespace cfpolar
{

// ---------------------------------------------------------------------------
// dim 5

/// Coefficients in ascending powers of x of R (degree 5), S (degree 5), T (degree 10),
/// with i_1 a root of T^2 - 64 S^2 R.
template <RealScalar Real>
struct N5PolyParts
{
  std::array<Real, 6> R{};
  std::array<Real, 6> S{};
  std::array<Real, 11> T{};
};

template <RealScalar Real>
N5PolyParts<Real> n5_poly_parts(const BasicPrincipalInvariants<Real>& I);

/// Ascending coefficients of T^2 - 64 S^2 R (degree 20).
template <RealScalar Real>
std::array<Real, 21> n5_composite(const N5PolyParts<Real>& parts);

/// Ascending coefficients of (T^2 - 64 S^2 R) / x^4 in the normalized variable x / sqrt(I1).
/// Monic, degree 16.
template <RealScalar Real>
std::array<Real, 17> n5_deflated(const BasicPrincipalInvariants<Real>& I);

/// (T^2 - 64 S^2 R)(x) / x^4, divided by I1^8. Any x != 0.
template <RealScalar Real>
Real n5_poly_eval(const BasicPrincipalInvariants<Real>& I, Real x);

/// Sum of |term| of the normalized evaluation at x: the scale its rounding error lives on.
template <RealScalar Real>
Real n5_poly_magnitude(const BasicPrincipalInvariants<Real>& I, Real x);

/// i_1 as the largest root on [sqrt(I1), sqrt(5 I1)]; i_2, i_5 directly; (i_3, i_4) from a quadratic
/// whose branch is chosen by the residual of the third identity. Throws BranchAmbiguous.
template <RealScalar Real>
BasicStretchInvariants<Real> n5_stretch_invariants(const BasicPrincipalInvariants<Real>& I);

/// Every sign change of the dim-5 polynomial on [lo, hi] (units of x).
template <RealScalar Real>
std::vector<Real> n5_scan_roots(const BasicPrincipalInvariants<Real>& I, Real lo, Real hi);

// ---------------------------------------------------------------------------
// dim 6

/// Elimination chain at one w = i_1^2. Subscripts give the degree in w (weight 2k in the stretches).
template <class S>
struct N6ElimState
{
  S w{}, i2{}, i6{};
  S a2{}, a4{}, a6{};
  S b2{}, b4{}, b6{}, b8{};
  S c4{}, c6{}, c8{};
  S d12{}, d14{};
};

/**
 * i_4 satisfies both i4^3 + a2 i4^2 + a4 i4 + a6 = 0 and i4^4 + b2 i4^3 + b4 i4^2 + b6 i4 + b8 = 0.
 * Reducing the quartic by the cubic twice leaves c4 i4^2 + c6 i4 + c8 = 0 and then
 * d12 i4 + d14 = 0. S may be a RealScalar, Dual or TermScale.
 */
template <class S, RealScalar Real>
N6ElimState<S> n6_elimination_state(const BasicPrincipalInvariants<Real>& I, S w)
{
  const auto k = [](double c) { return S(Real(c)); };
  const S I1(I(1)), I2(I(2)), I3(I(3)), I4(I(4)), I5(I(5));
  N6ElimState<S> st;
  st.w = w;
  st.i6 = S(num::sqrt(I(6)));
  st.i2 = k(0.5) * (w - I1);
  const S g = st.i2 * st.i2 - I2;
  const S h = I3 + k(2) * st.i6;
  const S w2 = w * w;
  const S w3 = w2 * w;
  st.a2 = k(1.5) * g - k(2) * w * st.i2 + w2;
  st.a4 = k(0.75) * g * g - w * st.i2 * g - w * h;
  st.a6 = k(0.125) * g * g * g - k(0.5) * w * g * h + w2 * (k(2) * st.i2 * st.i6 - I4);
  const S bb = g - k(2) * w * st.i2;
  const S gh = g * g - k(4) * w * h;
  st.b2 = k(2) * bb;
  st.b4 = bb * bb + k(0.5) * g * g - k(2) * w * h;
  st.b6 = k(0.5) * bb * gh - k(8) * w3 * st.i6;
  st.b8 = k(0.0625) * gh * gh - k(4) * w3 * I5;
  const S lead = st.b2 - st.a2;
  st.c4 = lead * st.a2 - (st.b4 - st.a4);
  st.c6 = lead * st.a4 - (st.b6 - st.a6);
  st.c8 = lead * st.a6 - st.b8;
  const S mix = st.a2 * st.c4 - st.c6;
  st.d12 = (st.a4 * st.c4 - st.c8) * st.c4 - mix * st.c6;
  st.d14 = st.a6 * st.c4 * st.c4 - mix * st.c8;
  return st;
}

/// e32 = -2^30 (c8 d12^2 - c6 d12 d14 + c4 d14^2): degree 32 in w, leading coefficient 121.
template <class S>
S n6_e32_from_state(const N6ElimState<S>& st)
{
  const S body = st.c8 * st.d12 * st.d12 - st.c6 * st.d12 * st.d14 + st.c4 * st.d14 * st.d14;
  return S(-1073741824.0) * body;
}

/// e32(w) / I1^32, evaluated by the chain in the normalized variable w / I1.
template <RealScalar Real>
Real n6_e32_eval(const BasicPrincipalInvariants<Real>& I, Real w);

/// Term-scale of the normalized e32 evaluation at w (never zero for positive invariants).
template <RealScalar Real>
Real n6_e32_magnitude(const BasicPrincipalInvariants<Real>& I, Real w);

/// 11 w^3 - 7 I1 w^2 + (5 I1^2 - 12 I2) w - (I1^3 - 4 I1 I2 + 8 I3 + 16 sqrt(I6)): its roots are
/// squared factors of e32 that never equal i_1^2 generically.
template <RealScalar Real>
struct N6SpuriousCubic
{
  /// Descending: w^3, w^2, w, 1.
  std::array<Real, 4> coeffs{};
  CubicRoots<Real> roots;
};

template <RealScalar Real>
N6SpuriousCubic<Real> n6_spurious_cubic(const BasicPrincipalInvariants<Real>& I);

/// i_4 at w from the quartic of the chain, the root chosen by identity residual. Throws D12Degenerate.
template <RealScalar Real>
Real n6_i4_from_quartic(const BasicPrincipalInvariants<Real>& I, Real w);

/// w = i_1^2 as the largest root of e32 on [I1, 6 I1]; then i_2, i_4 = -d14/d12, i_5, i_3, i_6.
/// Throws SpuriousCollision, D12Degenerate, NoRootInBracket.
template <RealScalar Real>
BasicStretchInvariants<Real> n6_stretch_invariants(const BasicPrincipalInvariants<Real>& I);

/// Every sign change of e32 on [lo, hi] (units of w).
template <RealScalar Real>
std::vector<Real> n6_scan_roots(const BasicPrincipalInvariants<Real>& I, Real lo, Real hi);

}  // namespace cfpolar

#endif

// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/poly_solvers.hpp"

namespace cfpolar
{

namespace
{
  // Relative size of p below which the three roots are taken as coincident.
  constexpr double kTripleRootRatio = 1e-14;
  // Resolvent roots above -kClampRatio * scale are clamped to zero.
  constexpr double kClampRatio = 1e-9;

  template <RealScalar Real>
  bool is_triple(const CubicStd<Real>& c, Real shift)
  {
    return num::abs(c.p) <= Real(kTripleRootRatio) * shift * shift;
  }

  // acos argument (q/2)/(p/3)^{3/2}, clamped to [-1, 1] once the excess is within
  // the rounding carried by q (absolute error ~ eps |shift|^3).
  template <RealScalar Real>
  Real trig_argument(const CubicStd<Real>& c, Real shift)
  {
    const Real r = num::sqrt(c.p / Real(3));
    const Real arg = (c.q / Real(2)) / (r * r * r);
    const Real noise = Real(1e-8) + Real(64) * num::epsilon<Real>() * num::abs(shift * shift * shift) / (r * r * r);
    if (!num::isfinite(arg) || num::abs(arg) > Real(1) + noise)
      throw Error(ErrorCode::complex_roots, "cubic discriminant positive: complex roots");
    return num::max(Real(-1), num::min(Real(1), arg));
  }
}  // namespace

template <RealScalar Real>
RootSet<Real> solve_cubic_trig(const CubicStd<Real>& cubic, Real shift)
{
  if (is_triple(cubic, shift)) return {shift, shift, shift};
  if (cubic.q == Real(0))
  {
    const Real s = num::sqrt(cubic.p);
    return {shift + s, shift, shift - s};
  }
  const Real arg = trig_argument(cubic, shift);
  const Real amp = Real(2) * num::sqrt(cubic.p / Real(3));
  const Real theta1 = num::acos(arg) / Real(3);
  const Real third = Real(2) * num::pi<Real>() / Real(3);
  return {shift + amp * num::cos(theta1), shift + amp * num::cos(theta1 - third),
      shift + amp * num::cos(theta1 + third)};
}

template <RealScalar Real>
Real largest_root_trig(const CubicStd<Real>& cubic, Real shift)
{
  if (is_triple(cubic, shift)) return shift;
  if (cubic.q == Real(0)) return shift + num::sqrt(cubic.p);
  const Real arg = trig_argument(cubic, shift);
  return shift + Real(2) * num::sqrt(cubic.p / Real(3)) * num::cos(num::acos(arg) / Real(3));
}

template <RealScalar Real>
CubicStd<Real> reduce_characteristic_cubic(const BasicPrincipalInvariants<Real>& inv)
{
  const Real i1 = inv(1), i2 = inv(2), i3 = inv(3);
  return {(i1 * i1 - Real(3) * i2) / Real(3),
      (Real(2) * i1 * i1 * i1 - Real(9) * i1 * i2 + Real(27) * i3) / Real(27)};
}

template <RealScalar Real>
Real cubic_discriminant(const BasicPrincipalInvariants<Real>& inv)
{
  // The bracket cancels to Prod(lambda_i^2 - lambda_j^2)^2, so it is evaluated in binary128.
  const quad i1 = static_cast<quad>(inv(1)), i2 = static_cast<quad>(inv(2)), i3 = static_cast<quad>(inv(3));
  const quad bracket = i1 * i1 * i2 * i2 + quad(18) * i1 * i2 * i3 - quad(4) * i1 * i1 * i1 * i3
                       - quad(4) * i2 * i2 * i2 - quad(27) * i3 * i3;
  return static_cast<Real>(-bracket / quad(108));
}

template <RealScalar Real>
std::array<Real, 3> resolvent_cubic(const QuarticReduced<Real>& quartic)
{
  const Real half_p = quartic.p / Real(2);
  const Real q8 = quartic.q / Real(8);
  return {half_p, (half_p * half_p - quartic.r) / Real(4), -q8 * q8};
}

template <RealScalar Real>
RootSet<Real> solve_reduced_quartic(const QuarticReduced<Real>& quartic)
{
  const auto [a, b, c] = resolvent_cubic(quartic);
  // depress n = y - a/3 into y^3 = P y + Q
  const CubicStd<Real> depressed{a * a / Real(3) - b, -(Real(2) * a * a * a / Real(27) - a * b / Real(3) + c)};
  RootSet<Real> n;
  try
  {
    n = solve_cubic_trig(depressed, -a / Real(3));
  }
  catch (const Error& e)
  {
    if (e.code() == ErrorCode::complex_roots)
      throw Error(ErrorCode::resolvent_complex, "resolvent cubic has complex roots");
    throw;
  }

  const Real scale = num::max(num::max(num::abs(n[0]), num::abs(a)), num::sqrt(num::abs(b)));
  std::array<Real, 3> s{};
  for (int k = 0; k < 3; ++k)
  {
    Real nk = n[k];
    if (nk < Real(0))
    {
      if (nk < -Real(kClampRatio) * scale) throw Error(ErrorCode::resolvent_complex, "negative resolvent root");
      nk = Real(0);
    }
    s[static_cast<std::size_t>(k)] = num::sqrt(nk);
  }
  // s1 s2 s3 = -q/8 fixes the smallest root without the cancellation in n3 itself
  if (s[0] * s[1] > Real(0))
    s[2] = -quartic.q / (Real(8) * s[0] * s[1]);
  else if (quartic.q > Real(0))
    s[2] = -s[2];
  return {s[0] + s[1] + s[2], s[0] - s[1] - s[2], -s[0] + s[1] - s[2], -s[0] - s[1] + s[2]};
}

template <RealScalar Real>
CubicRoots<Real> solve_cubic(Real a3, Real a2, Real a1, Real a0)
{
  const Real b = a2 / a3, c = a1 / a3, d = a0 / a3;
  const Real shift = -b / Real(3);
  const CubicStd<Real> dep{b * b / Real(3) - c, -(Real(2) * b * b * b / Real(27) - b * c / Real(3) + d)};

  CubicRoots<Real> out;
  const Real disc = num::square(dep.q / Real(2)) - num::square(dep.p / Real(3)) * (dep.p / Real(3));
  if (dep.p > Real(0) && disc <= Real(0))
  {
    out.real = solve_cubic_trig(dep, shift);
    return out;
  }
  if (dep.p > Real(0))
  {
    try
    {
      out.real = solve_cubic_trig(dep, shift);
      return out;
    }
    catch (const Error&)
    {
      // genuinely one real root; fall through to Cardano
    }
  }
  // One real root u + v with u v = p/3, u^3 + v^3 = q; the pair is -(u+v)/2 +- i sqrt(3)/2 (u-v).
  const Real root_disc = num::sqrt(num::max(disc, Real(0)));
  const Real t = dep.q / Real(2) + (dep.q < Real(0) ? -root_disc : root_disc);
  const Real u = num::cbrt(t);
  const Real v = (u != Real(0)) ? dep.p / (Real(3) * u) : Real(0);
  out.real.push(shift + u + v);
  if (disc > Real(0))
  {
    out.has_complex_pair = true;
    out.pair_real = shift - (u + v) / Real(2);
    out.pair_imag = num::abs(num::sqrt(Real(3)) / Real(2) * (u - v));
  }
  else
  {
    // p <= 0 with disc <= 0 means p == 0 == q: triple root
    out.real.push(shift + u + v);
    out.real.push(shift + u + v);
  }
  return out;
}

#define CFPOLAR_INSTANTIATE(Real)                                                               \
  template RootSet<Real> solve_cubic_trig<Real>(const CubicStd<Real>&, Real);                   \
  template Real largest_root_trig<Real>(const CubicStd<Real>&, Real);                           \
  template CubicStd<Real> reduce_characteristic_cubic<Real>(const BasicPrincipalInvariants<Real>&); \
  template Real cubic_discriminant<Real>(const BasicPrincipalInvariants<Real>&);                \
  template std::array<Real, 3> resolvent_cubic<Real>(const QuarticReduced<Real>&);              \
  template RootSet<Real> solve_reduced_quartic<Real>(const QuarticReduced<Real>&);              \
  template CubicRoots<Real> solve_cubic<Real>(Real, Real, Real, Real);

CFPOLAR_INSTANTIATE(double)
CFPOLAR_INSTANTIATE(long double)
CFPOLAR_INSTANTIATE(quad)

#undef CFPOLAR_INSTANTIATE

}  // namespace cfpolar

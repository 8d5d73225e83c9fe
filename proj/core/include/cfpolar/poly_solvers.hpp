// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_POLY_SOLVERS_HPP
#define CFPOLAR_POLY_SOLVERS_HPP

#include "cfpolar/error.hpp"
#include "cfpolar/invariants.hpp"
#include "cfpolar/scalar.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <initializer_list>
#include <limits>
#include <vector>

namespace cfpolar
{

/// Forward-mode dual number: value and derivative with respect to one variable.
template <RealScalar Real>
struct Dual
{
  Real v{};
  Real d{};

  constexpr Dual() = default;
  constexpr Dual(Real value) : v(value) {}  // NOLINT(google-explicit-constructor)
  constexpr Dual(Real value, Real derivative) : v(value), d(derivative) {}

  static constexpr Dual variable(Real x) { return {x, Real(1)}; }

  friend constexpr Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
  friend constexpr Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
  friend constexpr Dual operator-(Dual a) { return {-a.v, -a.d}; }
  friend constexpr Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
  friend constexpr Dual operator/(Dual a, Dual b)
  {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
  }
  Dual& operator+=(Dual o) { return *this = *this + o; }
  Dual& operator-=(Dual o) { return *this = *this - o; }
  Dual& operator*=(Dual o) { return *this = *this * o; }
};

/**
 * Value paired with the sum of the absolute values of every term that produced it.
 * Rounding error of a straight-line evaluation is bounded by a small multiple of
 * eps * m, so m is the natural scale for "is this residual zero".
 */
template <RealScalar Real>
struct TermScale
{
  Real v{};
  Real m{};

  constexpr TermScale() = default;
  TermScale(Real value) : v(value), m(num::abs(value)) {}  // NOLINT(google-explicit-constructor)
  constexpr TermScale(Real value, Real magnitude) : v(value), m(magnitude) {}

  friend TermScale operator+(TermScale a, TermScale b) { return {a.v + b.v, a.m + b.m}; }
  friend TermScale operator-(TermScale a, TermScale b) { return {a.v - b.v, a.m + b.m}; }
  friend TermScale operator-(TermScale a) { return {-a.v, a.m}; }
  friend TermScale operator*(TermScale a, TermScale b) { return {a.v * b.v, a.m * b.m}; }
  friend TermScale operator/(TermScale a, TermScale b) { return {a.v / b.v, a.m / num::abs(b.v)}; }
  TermScale& operator+=(TermScale o) { return *this = *this + o; }
  TermScale& operator-=(TermScale o) { return *this = *this - o; }
  TermScale& operator*=(TermScale o) { return *this = *this * o; }
};

template <RealScalar Real>
constexpr Real value_of(Real x)
{
  return x;
}

template <RealScalar Real>
constexpr Real value_of(const Dual<Real>& x)
{
  return x.v;
}

template <RealScalar Real>
constexpr Real value_of(const TermScale<Real>& x)
{
  return x.v;
}

/// f(x) and f'(x), as returned by the evaluators handed to the root search.
template <RealScalar Real>
struct ValueSlope
{
  Real value{};
  Real slope{};
};

/// Reduced cubic y^3 = p y + q.
template <RealScalar Real>
struct CubicStd
{
  Real p{};
  Real q{};
};

/// Reduced quartic y^4 + p y^2 + q y + r = 0.
template <RealScalar Real>
struct QuarticReduced
{
  Real p{};
  Real q{};
  Real r{};
};

/// Up to four real roots kept in descending order.
template <RealScalar Real>
class RootSet
{
 public:
  RootSet() = default;
  RootSet(std::initializer_list<Real> roots)
  {
    for (Real r : roots) push(r);
  }

  void push(Real root)
  {
    roots_[static_cast<std::size_t>(size_++)] = root;
    std::sort(roots_.begin(), roots_.begin() + size_, std::greater<>());
  }

  int size() const noexcept { return size_; }
  Real operator[](int k) const noexcept { return roots_[static_cast<std::size_t>(k)]; }
  Real largest() const noexcept { return roots_[0]; }
  const Real* begin() const noexcept { return roots_.data(); }
  const Real* end() const noexcept { return roots_.data() + size_; }

  /// Number of stored roots within tol of x.
  int multiplicity(Real x, Real tol) const noexcept
  {
    return static_cast<int>(std::count_if(begin(), end(), [&](Real r) { return num::abs(r - x) <= tol; }));
  }

 private:
  std::array<Real, 4> roots_{};
  int size_ = 0;
};

/// Roots of a real cubic with possibly one complex-conjugate pair.
template <RealScalar Real>
struct CubicRoots
{
  RootSet<Real> real;
  bool has_complex_pair = false;
  Real pair_real{};
  Real pair_imag{};
};

/**
 * Three real roots shift + 2 sqrt(p/3) cos(theta_k), descending, with
 * theta_1 = acos((q/2)/(p/3)^{3/2}) / 3 and theta_{2,3} = theta_1 -+ 2 pi / 3.
 *
 * p <= 1e-14 shift^2 is treated as a triple root at shift. Throws ComplexRoots
 * when the discriminant is positive beyond rounding.
 */
template <RealScalar Real>
RootSet<Real> solve_cubic_trig(const CubicStd<Real>& cubic, Real shift);

/// Only the theta_1 root of solve_cubic_trig (same branch logic and errors).
template <RealScalar Real>
Real largest_root_trig(const CubicStd<Real>& cubic, Real shift);

/// Reduced form of x^3 - I1 x^2 + I2 x - I3 about x = I1 / 3.
template <RealScalar Real>
CubicStd<Real> reduce_characteristic_cubic(const BasicPrincipalInvariants<Real>& inv);

/// D = (q/2)^2 - (p/3)^3 of the dim-3 characteristic cubic, from the invariants directly (binary128 evaluation).
template <RealScalar Real>
Real cubic_discriminant(const BasicPrincipalInvariants<Real>& inv);

/// Coefficients (a, b, c) of the resolvent n^3 + a n^2 + b n + c of a reduced quartic.
template <RealScalar Real>
std::array<Real, 3> resolvent_cubic(const QuarticReduced<Real>& quartic);

/**
 * Four real roots +-sqrt(n1) +-sqrt(n2) +-sqrt(n3) (even number of minus signs) of a
 * reduced quartic, n_i the resolvent roots. The third square root is taken as
 * -q / (8 sqrt(n1) sqrt(n2)), which carries the sign and avoids cancellation in small n3.
 * Throws ResolventComplex.
 */
template <RealScalar Real>
RootSet<Real> solve_reduced_quartic(const QuarticReduced<Real>& quartic);

/// All roots of a3 w^3 + a2 w^2 + a1 w + a0, a3 != 0.
template <RealScalar Real>
CubicRoots<Real> solve_cubic(Real a3, Real a2, Real a1, Real a0);

struct RootSearchOptions
{
  int scan_steps = 1024;
  int max_newton_steps = 60;
};

namespace detail
{
  /// Safeguarded Newton/bisection on a sign-change bracket [a, b].
  template <RealScalar Real, class F>
  Real refine_bracket(F& f, Real a, Real b, int max_newton)
  {
    const ValueSlope<Real> fa = f(a);
    if (fa.value == Real(0)) return a;
    const Real sign_a = num::sign(fa.value);
    const Real eps = num::epsilon<Real>();

    Real x = Real(0.5) * (a + b);
    Real dx_old = b - a;
    Real dx = dx_old;
    const int max_iter = max_newton + 4 * std::numeric_limits<double>::digits + 64;
    for (int it = 0; it < max_iter; ++it)
    {
      const ValueSlope<Real> fx = f(x);
      if (fx.value == Real(0)) return x;
      if (num::sign(fx.value) == sign_a)
        a = x;
      else
        b = x;

      const Real newton = (it < max_newton && fx.slope != Real(0)) ? x - fx.value / fx.slope : x;
      const bool use_newton = it < max_newton && fx.slope != Real(0) && newton > a && newton < b
                              && num::abs(Real(2) * (newton - x)) <= num::abs(dx_old);
      dx_old = dx;
      const Real next = use_newton ? newton : Real(0.5) * (a + b);
      dx = next - x;
      x = next;

      const Real xtol = Real(4) * eps * num::max(num::abs(a), num::abs(b));
      if (num::abs(dx) <= xtol || (b - a) <= xtol) return x;
    }
    return x;
  }

  /// Critical point of f on [a, b] given slope sign changes there; bisection on the slope.
  template <RealScalar Real, class F>
  Real locate_critical(F& f, Real a, Real b)
  {
    const Real slope_b_sign = num::sign(f(b).slope);
    for (int it = 0; it < 200 && (b - a) > Real(4) * num::epsilon<Real>() * num::abs(b); ++it)
    {
      const Real m = Real(0.5) * (a + b);
      if (num::sign(f(m).slope) == slope_b_sign)
        b = m;
      else
        a = m;
    }
    return Real(0.5) * (a + b);
  }
}  // namespace detail

/**
 * Largest real root of f in [lo, hi], f(x) returning ValueSlope<Real>.
 *
 * Scans downward from hi in scan_steps equal steps until f changes sign, then refines
 * with safeguarded Newton. Right of the largest root f keeps its sign and |f| grows,
 * so a slope reversal between two samples with no sign change marks a local dip;
 * the dip's extremum is located and checked so pairs of close roots inside one step
 * are not skipped. Throws NoRootInBracket.
 */
template <RealScalar Real, class F>
Real largest_root_bracketed(F&& f, Real lo, Real hi, const RootSearchOptions& opts = {})
{
  ValueSlope<Real> right = f(hi);
  if (right.value == Real(0)) return hi;
  if (!num::isfinite(right.value)) throw Error(ErrorCode::no_root_in_bracket, "evaluator not finite at hi");
  const Real s = num::sign(right.value);
  const Real step = (hi - lo) / Real(opts.scan_steps);
  Real x_right = hi;
  for (int k = 1; k <= opts.scan_steps; ++k)
  {
    const Real x_left = (k == opts.scan_steps) ? lo : hi - Real(k) * step;
    const ValueSlope<Real> left = f(x_left);
    // a sample exactly on the lower root of a close pair must not hide the upper one
    if ((left.value == Real(0) || num::sign(left.value) == s) && s * right.slope > Real(0) && s * left.slope <= Real(0))
    {
      const Real xm = detail::locate_critical(f, x_left, x_right);
      const ValueSlope<Real> mid = f(xm);
      if (num::sign(mid.value) != s) return detail::refine_bracket(f, xm, x_right, opts.max_newton_steps);
    }
    if (left.value == Real(0)) return x_left;
    if (num::sign(left.value) != s) return detail::refine_bracket(f, x_left, x_right, opts.max_newton_steps);
    x_right = x_left;
    right = left;
  }
  throw Error(ErrorCode::no_root_in_bracket, "no sign change found in bracket");
}

/// Every sign change of f on [lo, hi] found by a uniform scan, refined, descending.
template <RealScalar Real, class F>
std::vector<Real> scan_sign_changes(F&& f, Real lo, Real hi, const RootSearchOptions& opts = {})
{
  std::vector<Real> roots;
  const Real step = (hi - lo) / Real(opts.scan_steps);
  Real x_right = hi;
  ValueSlope<Real> right = f(hi);
  for (int k = 1; k <= opts.scan_steps; ++k)
  {
    const Real x_left = (k == opts.scan_steps) ? lo : hi - Real(k) * step;
    const ValueSlope<Real> left = f(x_left);
    if (left.value == Real(0))
      roots.push_back(x_left);
    else if (right.value != Real(0) && num::sign(left.value) != num::sign(right.value))
      roots.push_back(detail::refine_bracket(f, x_left, x_right, opts.max_newton_steps));
    x_right = x_left;
    right = left;
  }
  return roots;
}

}  // namespace cfpolar

#endif

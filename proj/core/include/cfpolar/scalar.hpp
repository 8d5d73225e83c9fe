// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_SCALAR_HPP
#define CFPOLAR_SCALAR_HPP

#include <cmath>
#include <concepts>
#include <limits>
#include <type_traits>

#include <quadmath.h>

namespace cfpolar
{

/// IEEE binary128, software-emulated through libquadmath.
using quad = __float128;

template <class T>
concept RealScalar = std::same_as<T, double> || std::same_as<T, long double> || std::same_as<T, quad>;

/// Math shims so templated kernels can call sqrt/cos/... unqualified for every RealScalar.
namespace num
{
  // explicit overloads: under GNU extensions std::abs already has a __float128 overload
  inline double abs(double x) { return std::fabs(x); }
  inline long double abs(long double x) { return std::fabs(x); }
  using std::acos;
  using std::cbrt;
  using std::cos;
  using std::isfinite;
  using std::sqrt;

  inline quad sqrt(quad x) { return sqrtq(x); }
  inline quad cbrt(quad x) { return cbrtq(x); }
  inline quad cos(quad x) { return cosq(x); }
  inline quad acos(quad x) { return acosq(x); }
  inline quad abs(quad x) { return fabsq(x); }
  inline bool isfinite(quad x) { return finiteq(x) != 0; }

  template <RealScalar Real>
  constexpr Real epsilon()
  {
    if constexpr (std::same_as<Real, quad>)
      return quad(1) / (quad(1ULL << 56) * quad(1ULL << 56));  // 2^-112
    else
      return std::numeric_limits<Real>::epsilon();
  }

  template <RealScalar Real>
  Real pi()
  {
    if constexpr (std::same_as<Real, quad>)
      return acosq(quad(-1));
    else
      return static_cast<Real>(3.141592653589793238462643383279502884L);
  }

  template <RealScalar Real>
  constexpr Real sign(Real x)
  {
    return x > Real(0) ? Real(1) : (x < Real(0) ? Real(-1) : Real(0));
  }

  template <RealScalar Real>
  constexpr Real square(Real x)
  {
    return x * x;
  }

  template <RealScalar Real>
  constexpr Real max(Real a, Real b)
  {
    return a < b ? b : a;
  }

  template <RealScalar Real>
  constexpr Real min(Real a, Real b)
  {
    return b < a ? b : a;
  }
}  // namespace num

/// Working precision used by the double-in/double-out pipeline for a given dimension.
/// Dimensions 5 and 6 go through degree-16/32 root problems and a monomial-basis
/// reconstruction whose cancellation exceeds what double can carry.
enum class Precision
{
  binary64,
  extended80,
  binary128
};

constexpr Precision working_precision(int dim)
{
  if (dim <= 3) return Precision::binary64;
  if (dim == 4) return Precision::extended80;
  return Precision::binary128;
}

}  // namespace cfpolar

#endif

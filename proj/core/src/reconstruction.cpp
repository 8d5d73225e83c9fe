// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/reconstruction.hpp"

#include <cmath>
#include <string>

namespace cfpolar
{

namespace
{
  constexpr double kNearSingularFactor = 1e3;
  constexpr double kSingularF = 1e-14;

  template <RealScalar Real>
  void require_consistent(const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I)
  {
    if (i.dim != I.dim) throw Error(ErrorCode::dim_mismatch, "invariants of U and C have different dimensions");
    require_supported_dim(I.dim);
  }

  template <RealScalar Real>
  std::array<Real, kMaxDim> divided(std::array<Real, kMaxDim> c, Real nu, int dim)
  {
    for (int k = 0; k < dim; ++k) c[static_cast<std::size_t>(k)] /= nu;
    return c;
  }

  // Numerators p0..p4 of the dim-5 reconstruction.
  template <RealScalar Real>
  std::array<Real, 5> n5_numerators(const BasicStretchInvariants<Real>& i)
  {
    const Real i1 = i(1), i2 = i(2), i3 = i(3), i4 = i(4), i5 = i(5);
    const Real i11 = i1 * i1, i111 = i11 * i1, i22 = i2 * i2, i33 = i3 * i3;
    const Real i12 = i1 * i2;
    return {(i12 * i3 + i1 * i5 - i11 * i4 - i33) * i5,
        i11 * i2 * i5 + i12 * i33 + i1 * i4 * i4 + i2 * i3 * i4 - i11 * i3 * i4 - i1 * i22 * i4 - i33 * i3 - i4 * i5,
        i111 * i4 + i1 * i22 * i2 + Real(2) * i1 * i33 + i2 * i5 - Real(2) * i11 * i2 * i3 - i11 * i5 - i22 * i3
            - i3 * i4,
        i111 * i2 + i1 * i4 + Real(2) * i2 * i3 - i11 * i3 - Real(2) * i1 * i22 - i5, i12 - i3};
  }

  // Numerators p0..p5 of the dim-6 reconstruction.
  template <RealScalar Real>
  std::array<Real, 6> n6_numerators(const BasicStretchInvariants<Real>& i)
  {
    const Real i1 = i(1), i2 = i(2), i3 = i(3), i4 = i(4), i5 = i(5), i6 = i(6);
    const Real i11 = i1 * i1, i111 = i11 * i1, i1111 = i111 * i1;
    const Real i22 = i2 * i2, i222 = i22 * i2;
    const Real i33 = i3 * i3, i333 = i33 * i3;
    const Real i44 = i4 * i4, i55 = i5 * i5;
    const Real two(2), three(3);

    const Real p0 = (i1 * i2 * i3 * i4 + two * i1 * i4 * i5 + i2 * i3 * i5 + i11 * i2 * i6 - i1 * i22 * i5
                        - i1 * i3 * i6 - i11 * i44 - i33 * i4 - i55)
                    * i6;
    const Real p1 = -i111 * i5 * i6 + i11 * i2 * i55 + i11 * i3 * i4 * i5 - i11 * i44 * i4 + i11 * i6 * i6
                    + i1 * i22 * i3 * i6 - i1 * i22 * i4 * i5 - i1 * i2 * i33 * i5 + i1 * i2 * i3 * i44
                    - i1 * i3 * i4 * i6 - two * i1 * i3 * i55 + two * i1 * i44 * i5 - i2 * i33 * i6
                    + i2 * i3 * i4 * i5 + i333 * i5 - i33 * i44 + i3 * i5 * i6 - i4 * i55;
    const Real p2 = i111 * i3 * i6 - i111 * i4 * i5 - i11 * i22 * i6 + two * i11 * i2 * i44 - i11 * i33 * i4
                    + i11 * i55 + i1 * i222 * i5 - two * i1 * i22 * i3 * i4 + i1 * i2 * i333
                    - two * i1 * i2 * i4 * i5 + i1 * i33 * i5 - i1 * i5 * i6 - i22 * i3 * i5 + two * i2 * i33 * i4
                    + i2 * i55 - i333 * i3 + i33 * i6 - i3 * i4 * i5;
    const Real p3 = -i1111 * i6 + i111 * i2 * i5 + two * i111 * i3 * i4 - i11 * i22 * i4 - two * i11 * i2 * i33
                    + two * i11 * i2 * i6 - three * i11 * i3 * i5 - two * i11 * i44 + i1 * i222 * i3
                    - i1 * i22 * i5 + two * i1 * i2 * i3 * i4 + two * i1 * i333 - i1 * i3 * i6
                    + three * i1 * i4 * i5 - i22 * i33 + two * i2 * i3 * i5 - two * i33 * i4 - i55;
    const Real p4 = -i1111 * i4 + i111 * i2 * i3 + i111 * i5 + two * i11 * i2 * i4 - i11 * i33 - i11 * i6
                    - two * i1 * i22 * i3 - i1 * i2 * i5 + two * i2 * i33 - i3 * i5;
    const Real p5 = i1 * i2 * i3 + i1 * i5 - i11 * i4 - i33;
    return {p0, p1, p2, p3, p4, p5};
  }
}  // namespace

template <RealScalar Real>
BasicStretchInvariants<Real> stretch_invariants(const BasicPrincipalInvariants<Real>& I)
{
  switch (I.dim)
  {
    case 2: return n2_stretch_invariants(I);
    case 3: return n3_stretch_invariants(I);
    case 4: return n4_stretch_invariants(I);
    case 5: return n5_stretch_invariants(I);
    case 6: return n6_stretch_invariants(I);
    default: require_supported_dim(I.dim);
  }
  throw Error(ErrorCode::dim_unsupported, "unsupported dimension");
}

template <RealScalar Real>
Real nu(const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I)
{
  require_consistent(i, I);
  const int n = i.dim;
  Real value(0);
  switch (n)
  {
    case 2: value = i(1); break;
    case 3: value = i(1) * i(2) - i(3); break;
    case 4: value = i(1) * i(2) * i(3) - i(3) * i(3) - i(1) * i(1) * i(4); break;
    case 5:
    {
      const Real i1 = i(1), i2 = i(2), i3 = i(3), i4 = i(4), i5 = i(5);
      value = i1 * i2 * i3 * i4 + Real(2) * i1 * i4 * i5 + i2 * i3 * i5 - i1 * i1 * i4 * i4 - i1 * i2 * i2 * i5
              - i3 * i3 * i4 - i5 * i5;
      break;
    }
    default:
    {
      const Real i1 = i(1), i2 = i(2), i3 = i(3), i4 = i(4), i5 = i(5), i6 = i(6);
      const Real i11 = i1 * i1, i55 = i5 * i5;
      value = i1 * i2 * i3 * i4 * i5 + i11 * i3 * i4 * i6 + Real(2) * i11 * i2 * i5 * i6 + Real(2) * i1 * i4 * i55
              + i3 * i3 * i3 * i6 + i2 * i3 * i55 - i11 * i1 * i6 * i6 - i1 * i2 * i3 * i3 * i6
              - Real(3) * i1 * i3 * i5 * i6 - i11 * i4 * i4 * i5 - i1 * i2 * i2 * i55 - i3 * i3 * i4 * i5
              - i55 * i5;
      break;
    }
  }
  Real natural(1);
  for (int k = 0; k < n * (n - 1) / 2; ++k) natural *= i(1);
  if (!(value > Real(kNearSingularFactor) * num::epsilon<Real>() * natural))
    throw Error(ErrorCode::near_singular, "nu is negligible against its natural scale");
  return value;
}

template <RealScalar Real>
std::array<Real, kMaxDim> sqrt_coefficients(const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I)
{
  const Real v = nu(i, I);
  const int n = i.dim;
  std::array<Real, kMaxDim> c{};
  switch (n)
  {
    case 2: c = {i(2), Real(1)}; break;
    case 3: c = {i(1) * i(3), I(1) + i(2), Real(-1)}; break;
    case 4:
    {
      const Real i1 = i(1), i2 = i(2), i3 = i(3), i4 = i(4);
      const Real i11 = i1 * i1;
      c = {(i1 * i2 - i3) * i4, i1 * i2 * i2 - i11 * i3 - i2 * i3 + i1 * i4, -(i11 * i1 - Real(2) * i1 * i2 + i3), i1};
      break;
    }
    case 5:
    {
      const auto p = n5_numerators(i);
      c = {p[0], p[1], -p[2], p[3], -p[4]};
      break;
    }
    default:
    {
      const auto p = n6_numerators(i);
      c = {p[0], p[1], -p[2], p[3], -p[4], p[5]};
      break;
    }
  }
  return divided(c, v, n);
}

template <RealScalar Real>
std::array<Real, kMaxDim> inverse_sqrt_coefficients(
    const BasicStretchInvariants<Real>& i, const BasicPrincipalInvariants<Real>& I)
{
  const Real v = nu(i, I);
  const int n = i.dim;
  std::array<Real, kMaxDim> c{};
  switch (n)
  {
    case 2: c = {(I(1) + i(2)) / i(2), Real(-1) / i(2)}; break;
    case 3:
    {
      const Real r = i(1) / i(3);
      c = {I(1) + i(2) + r * I(2), -(Real(1) + r * I(1)), r};
      break;
    }
    case 4:
    {
      const Real i1 = i(1), i2 = i(2), i3 = i(3), i4 = i(4);
      const Real i11 = i1 * i1;
      const Real k = (i1 * i2 - i3) / i4;
      c = {i1 * i2 * i2 - i11 * i3 - i2 * i3 + i1 * i4 + k * I(3), -(i11 * i1 - Real(2) * i1 * i2 + i3 + k * I(2)),
          i1 + k * I(1), -k};
      break;
    }
    case 5:
    {
      const auto p = n5_numerators(i);
      const Real r = p[0] / I(5);
      c = {p[1] + r * I(4), -(p[2] + r * I(3)), p[3] + r * I(2), -(p[4] + r * I(1)), r};
      break;
    }
    default:
    {
      const auto p = n6_numerators(i);
      const Real r = p[0] / I(6);
      c = {p[1] + r * I(5), -(p[2] + r * I(4)), p[3] + r * I(3), -(p[4] + r * I(2)), p[5] + r * I(1), -r};
      break;
    }
  }
  return divided(c, v, n);
}

template <RealScalar Real>
BasicSymTensor<Real> u_from_c(
    const BasicSymTensor<Real>& c, const BasicPrincipalInvariants<Real>& I, const BasicStretchInvariants<Real>& i)
{
  if (c.dim() != I.dim) throw Error(ErrorCode::dim_mismatch, "tensor and invariants differ in dimension");
  const auto coeffs = sqrt_coefficients(i, I);
  return mat_poly(c, std::span<const Real>(coeffs.data(), static_cast<std::size_t>(c.dim())));
}

template <RealScalar Real>
BasicSymTensor<Real> uinv_from_c(
    const BasicSymTensor<Real>& c, const BasicPrincipalInvariants<Real>& I, const BasicStretchInvariants<Real>& i)
{
  if (c.dim() != I.dim) throw Error(ErrorCode::dim_mismatch, "tensor and invariants differ in dimension");
  const auto coeffs = inverse_sqrt_coefficients(i, I);
  return mat_poly(c, std::span<const Real>(coeffs.data(), static_cast<std::size_t>(c.dim())));
}

namespace
{
  /**
   * One Newton step X + X (I - U X) towards U^{-1}, symmetrized. The inverse polynomial in C
   * cancels terms of size cond(C)^{N-1}; the step brings the error down to cond(U) eps.
   * U X is symmetric only up to rounding of the same order as I - U X, so the products are full.
   */
  template <RealScalar Real>
  BasicSymTensor<Real> refined_inverse(const BasicSymTensor<Real>& u, const BasicSymTensor<Real>& x)
  {
    const BasicMatrix<Real> xf = x.full();
    const BasicMatrix<Real> e = BasicMatrix<Real>::identity(u.dim()) - u.full() * xf;
    return (xf + xf * e).symmetric_part();
  }

  /// Newton-Schulz step R (3I - R^T R) / 2: R times a polynomial in R^T R, so the polar factor is
  /// unchanged while the orthogonality defect E becomes O(E^2). Removes the cond(U) amplification of
  /// rounding in U^{-1}.
  template <RealScalar Real>
  BasicMatrix<Real> orthogonality_step(const BasicMatrix<Real>& r)
  {
    const int n = r.dim();
    BasicMatrix<Real> g = r.transpose() * r;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = (i == j ? Real(1.5) : Real(0)) - Real(0.5) * g(i, j);
    return r * g;
  }

  // dim 2 in double, with fixed-size kernels. Packed upper triangle: 00 01 11.
  using Packed2 = std::array<double, 3>;

  struct Stretch2
  {
    Packed2 u{}, uinv{};
    PrincipalInvariants I;
    StretchInvariants i;
    double nu = 0.0;
  };

  Stretch2 stretch2(const Packed2& c)
  {
    const double det = c[0] * c[2] - c[1] * c[1];
    if (!(c[0] > 0.0) || !(det > 0.0) || !std::isfinite(det))
      throw Error(ErrorCode::not_positive_definite, "tensor is not symmetric positive-definite");
    Stretch2 w;
    w.I = {2, {c[0] + c[2], det}};
    w.i = n2_stretch_invariants(w.I);
    w.nu = nu(w.i, w.I);
    const auto k = sqrt_coefficients(w.i, w.I);
    const auto kinv = inverse_sqrt_coefficients(w.i, w.I);
    w.u = {k[0] + k[1] * c[0], k[1] * c[1], k[0] + k[1] * c[2]};
    const Packed2 x{kinv[0] + kinv[1] * c[0], kinv[1] * c[1], kinv[0] + kinv[1] * c[2]};
    // refined_inverse with fixed-size full products
    const double e00 = 1.0 - (w.u[0] * x[0] + w.u[1] * x[1]), e01 = -(w.u[0] * x[1] + w.u[1] * x[2]);
    const double e10 = -(w.u[1] * x[0] + w.u[2] * x[1]), e11 = 1.0 - (w.u[1] * x[1] + w.u[2] * x[2]);
    const double d01 = x[0] * e01 + x[1] * e11, d10 = x[1] * e00 + x[2] * e10;
    w.uinv = {x[0] + x[0] * e00 + x[1] * e10, x[1] + 0.5 * (d01 + d10), x[2] + x[1] * e01 + x[2] * e11};
    return w;
  }

  SymTensor unpack2(const Packed2& p)
  {
    SymTensor t(2);
    t.set(0, 0, p[0]);
    t.set(0, 1, p[1]);
    t.set(1, 1, p[2]);
    return t;
  }

  RightStretch right_stretch2(const SymTensor& c)
  {
    const Stretch2 w = stretch2({c(0, 0), c(0, 1), c(1, 1)});
    return {unpack2(w.u), unpack2(w.uinv), w.I, w.i, w.nu, Precision::binary64};
  }

  PolarFactors polar2(const Matrix& f)
  {
    const Stretch2 w = stretch2({f(0, 0) * f(0, 0) + f(1, 0) * f(1, 0), f(0, 0) * f(0, 1) + f(1, 0) * f(1, 1),
        f(0, 1) * f(0, 1) + f(1, 1) * f(1, 1)});
    const double a00 = f(0, 0) * w.uinv[0] + f(0, 1) * w.uinv[1], a01 = f(0, 0) * w.uinv[1] + f(0, 1) * w.uinv[2];
    const double a10 = f(1, 0) * w.uinv[0] + f(1, 1) * w.uinv[1], a11 = f(1, 0) * w.uinv[1] + f(1, 1) * w.uinv[2];
    // orthogonality_step with fixed-size products
    const double g00 = 1.5 - 0.5 * (a00 * a00 + a10 * a10), g01 = -0.5 * (a00 * a01 + a10 * a11);
    const double g11 = 1.5 - 0.5 * (a01 * a01 + a11 * a11);
    Matrix r(2);
    r(0, 0) = a00 * g00 + a01 * g01;
    r(0, 1) = a00 * g01 + a01 * g11;
    r(1, 0) = a10 * g00 + a11 * g01;
    r(1, 1) = a10 * g01 + a11 * g11;
    return {unpack2(w.u), unpack2(w.uinv), r, w.I, w.i, w.nu, Precision::binary64};
  }

  // dim 3 in double, with fixed-size kernels. Packed upper triangle: 00 01 02 11 12 22.
  using Packed3 = std::array<double, 6>;

  constexpr int kPacked3[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

  Packed3 product3(const Packed3& a, const Packed3& b)
  {
    Packed3 out{};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        out[kPacked3[i][j]] = a[kPacked3[i][0]] * b[kPacked3[0][j]] + a[kPacked3[i][1]] * b[kPacked3[1][j]]
                              + a[kPacked3[i][2]] * b[kPacked3[2][j]];
    return out;
  }

  Packed3 poly3(const std::array<double, kMaxDim>& k, const Packed3& c, const Packed3& c2)
  {
    Packed3 out{};
    for (int p = 0; p < 6; ++p) out[p] = k[1] * c[p] + k[2] * c2[p];
    out[0] += k[0];
    out[3] += k[0];
    out[5] += k[0];
    return out;
  }

  SymTensor unpack3(const Packed3& p)
  {
    SymTensor t(3);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) t.set(i, j, p[kPacked3[i][j]]);
    return t;
  }

  struct Stretch3
  {
    Packed3 u{}, uinv{};
    PrincipalInvariants I;
    StretchInvariants i;
    double nu = 0.0;
  };

  Stretch3 stretch3(const Packed3& c)
  {
    // LDL^T pivots: positive definiteness and I3 = d0 d1 d2 in one pass
    const double d0 = c[0];
    const double d1 = c[3] - c[1] * c[1] / d0;
    const double l21 = (c[4] - c[1] * c[2] / d0) / d1;
    const double d2 = c[5] - c[2] * c[2] / d0 - l21 * l21 * d1;
    if (!(d0 > 0.0) || !(d1 > 0.0) || !(d2 > 0.0) || !std::isfinite(d2))
      throw Error(ErrorCode::not_positive_definite, "tensor is not symmetric positive-definite");

    Stretch3 w;
    w.I = {3, {c[0] + c[3] + c[5],
                  c[0] * c[3] - c[1] * c[1] + c[0] * c[5] - c[2] * c[2] + c[3] * c[5] - c[4] * c[4], d0 * d1 * d2}};
    w.i = n3_stretch_invariants(w.I);
    w.nu = nu(w.i, w.I);
    const Packed3 c2 = product3(c, c);
    w.u = poly3(sqrt_coefficients(w.i, w.I), c, c2);
    const Packed3 x = poly3(inverse_sqrt_coefficients(w.i, w.I), c, c2);
    // refined_inverse with fixed-size full products
    double e[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        e[i][j] = (i == j ? 1.0 : 0.0)
                  - (w.u[kPacked3[i][0]] * x[kPacked3[0][j]] + w.u[kPacked3[i][1]] * x[kPacked3[1][j]]
                      + w.u[kPacked3[i][2]] * x[kPacked3[2][j]]);
    double dx[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        dx[i][j] = x[kPacked3[i][0]] * e[0][j] + x[kPacked3[i][1]] * e[1][j] + x[kPacked3[i][2]] * e[2][j];
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) w.uinv[kPacked3[i][j]] = x[kPacked3[i][j]] + 0.5 * (dx[i][j] + dx[j][i]);
    return w;
  }

  RightStretch right_stretch3(const SymTensor& c)
  {
    const Stretch3 w = stretch3({c(0, 0), c(0, 1), c(0, 2), c(1, 1), c(1, 2), c(2, 2)});
    return {unpack3(w.u), unpack3(w.uinv), w.I, w.i, w.nu, Precision::binary64};
  }

  PolarFactors polar3(const Matrix& f)
  {
    Packed3 c{};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) c[kPacked3[i][j]] = f(0, i) * f(0, j) + f(1, i) * f(1, j) + f(2, i) * f(2, j);
    const Stretch3 w = stretch3(c);
    double a[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        a[i][j] = f(i, 0) * w.uinv[kPacked3[0][j]] + f(i, 1) * w.uinv[kPacked3[1][j]] + f(i, 2) * w.uinv[kPacked3[2][j]];
    // orthogonality_step with fixed-size products
    Packed3 g{};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        g[kPacked3[i][j]] = (i == j ? 1.5 : 0.0) - 0.5 * (a[0][i] * a[0][j] + a[1][i] * a[1][j] + a[2][i] * a[2][j]);
    Matrix r(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        r(i, j) = a[i][0] * g[kPacked3[0][j]] + a[i][1] * g[kPacked3[1][j]] + a[i][2] * g[kPacked3[2][j]];
    return {unpack3(w.u), unpack3(w.uinv), r, w.I, w.i, w.nu, Precision::binary64};
  }

  double determinant3(const Matrix& f)
  {
    return f(0, 0) * (f(1, 1) * f(2, 2) - f(1, 2) * f(2, 1)) - f(0, 1) * (f(1, 0) * f(2, 2) - f(1, 2) * f(2, 0))
           + f(0, 2) * (f(1, 0) * f(2, 1) - f(1, 1) * f(2, 0));
  }

  template <RealScalar Real>
  struct StretchWork
  {
    BasicSymTensor<Real> u;
    BasicSymTensor<Real> uinv;
    BasicPrincipalInvariants<Real> I;
    BasicStretchInvariants<Real> i;
    Real nu;
  };

  template <RealScalar Real>
  StretchWork<Real> stretch_work(const BasicSymTensor<Real>& c)
  {
    StretchWork<Real> w;
    w.I = invariants_from_tensor(c);
    w.i = stretch_invariants(w.I);
    w.nu = nu(w.i, w.I);
    w.u = u_from_c(c, w.I, w.i);
    w.uinv = refined_inverse(w.u, uinv_from_c(c, w.I, w.i));
    return w;
  }

  template <RealScalar Real>
  constexpr Precision precision_of()
  {
    if constexpr (std::same_as<Real, double>)
      return Precision::binary64;
    else if constexpr (std::same_as<Real, long double>)
      return Precision::extended80;
    else
      return Precision::binary128;
  }

  template <RealScalar Real>
  PolarFactors polar_in(const Matrix& f)
  {
    const BasicMatrix<Real> fr = f.cast<Real>();
    const StretchWork<Real> w = stretch_work(gram(fr));
    PolarFactors out;
    out.u = w.u.template cast<double>();
    out.uinv = w.uinv.template cast<double>();
    out.r = orthogonality_step(fr * w.uinv.full()).template cast<double>();
    out.invariants = w.I.template cast<double>();
    out.stretch_invariants = w.i.template cast<double>();
    out.nu = static_cast<double>(w.nu);
    out.precision = precision_of<Real>();
    return out;
  }
}  // namespace

template <RealScalar Real>
RightStretch right_stretch_in(const SymTensor& c)
{
  const StretchWork<Real> w = stretch_work(c.cast<Real>());
  RightStretch out;
  out.u = w.u.template cast<double>();
  out.uinv = w.uinv.template cast<double>();
  out.invariants = w.I.template cast<double>();
  out.stretch_invariants = w.i.template cast<double>();
  out.nu = static_cast<double>(w.nu);
  out.precision = precision_of<Real>();
  return out;
}

RightStretch right_stretch(const SymTensor& c)
{
  require_supported_dim(c.dim());
  if (c.dim() == 2) return right_stretch2(c);
  if (c.dim() == 3) return right_stretch3(c);
  switch (working_precision(c.dim()))
  {
    case Precision::binary64: return right_stretch_in<double>(c);
    case Precision::extended80: return right_stretch_in<long double>(c);
    case Precision::binary128: return right_stretch_in<quad>(c);
  }
  return right_stretch_in<quad>(c);
}

PolarFactors polar_decompose(const Matrix& f)
{
  const int n = f.dim();
  require_supported_dim(n);
  const double det = n == 3 ? determinant3(f) : determinant(f);
  double scale = 1.0;
  const double mean = f.frobenius_norm() / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) scale *= mean;
  if (!std::isfinite(det) || !(std::abs(det) > kSingularF * scale))
    throw Error(ErrorCode::singular_f, "deformation gradient is singular");
  if (n == 2) return polar2(f);
  if (n == 3) return polar3(f);
  switch (working_precision(n))
  {
    case Precision::binary64: return polar_in<double>(f);
    case Precision::extended80: return polar_in<long double>(f);
    case Precision::binary128: return polar_in<quad>(f);
  }
  return polar_in<quad>(f);
}

#define CFPOLAR_INSTANTIATE(Real)                                                                          \
  template BasicStretchInvariants<Real> stretch_invariants<Real>(const BasicPrincipalInvariants<Real>&);    \
  template Real nu<Real>(const BasicStretchInvariants<Real>&, const BasicPrincipalInvariants<Real>&);       \
  template std::array<Real, kMaxDim> sqrt_coefficients<Real>(                                              \
      const BasicStretchInvariants<Real>&, const BasicPrincipalInvariants<Real>&);                         \
  template std::array<Real, kMaxDim> inverse_sqrt_coefficients<Real>(                                      \
      const BasicStretchInvariants<Real>&, const BasicPrincipalInvariants<Real>&);                         \
  template BasicSymTensor<Real> u_from_c<Real>(                                                            \
      const BasicSymTensor<Real>&, const BasicPrincipalInvariants<Real>&, const BasicStretchInvariants<Real>&); \
  template BasicSymTensor<Real> uinv_from_c<Real>(                                                         \
      const BasicSymTensor<Real>&, const BasicPrincipalInvariants<Real>&, const BasicStretchInvariants<Real>&); \
  template RightStretch right_stretch_in<Real>(const SymTensor&);

CFPOLAR_INSTANTIATE(double)
CFPOLAR_INSTANTIATE(long double)
CFPOLAR_INSTANTIATE(quad)

#undef CFPOLAR_INSTANTIATE

}  // namespace cfpolar

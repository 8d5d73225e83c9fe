// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_TENSOR_HPP
#define CFPOLAR_TENSOR_HPP

#include "cfpolar/error.hpp"
#include "cfpolar/scalar.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

namespace cfpolar
{

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 6;

inline void require_supported_dim(int dim)
{
  if (dim < kMinDim || dim > kMaxDim)
    throw Error(ErrorCode::dim_unsupported,
        "dimension " + std::to_string(dim) + " outside supported range 2..6");
}

template <RealScalar Real>
class BasicMatrix;

/**
 * Dense symmetric N x N tensor, N in 2..6.
 *
 * Only the upper triangle is stored, packed row by row into a fixed 6x6 block, so
 * (i, j) and (j, i) address the same element and symmetry holds structurally.
 */
template <RealScalar Real>
class BasicSymTensor
{
 public:
  using value_type = Real;

  BasicSymTensor() = default;

  explicit BasicSymTensor(int dim) : dim_(dim)
  {
    require_supported_dim(dim);
    packed_.fill(Real(0));
  }

  static BasicSymTensor identity(int dim) { return scaled_identity(dim, Real(1)); }

  static BasicSymTensor scaled_identity(int dim, Real value)
  {
    BasicSymTensor t(dim);
    for (int i = 0; i < dim; ++i) t.set(i, i, value);
    return t;
  }

  static BasicSymTensor diagonal(std::span<const Real> diag)
  {
    BasicSymTensor t(static_cast<int>(diag.size()));
    for (int i = 0; i < t.dim(); ++i) t.set(i, i, diag[static_cast<std::size_t>(i)]);
    return t;
  }

  static BasicSymTensor diagonal(std::initializer_list<Real> diag)
  {
    return diagonal(std::span<const Real>(diag.begin(), diag.size()));
  }

  /// Reads the upper triangle of a row-major dim x dim block; the lower triangle is ignored.
  static BasicSymTensor from_upper(int dim, std::span<const Real> row_major)
  {
    BasicSymTensor t(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) t.set(i, j, row_major[static_cast<std::size_t>(i * dim + j)]);
    return t;
  }

  int dim() const noexcept { return dim_; }

  Real operator()(int i, int j) const noexcept { return packed_[index(i, j)]; }

  void set(int i, int j, Real value) noexcept { packed_[index(i, j)] = value; }

  Real trace() const noexcept
  {
    Real s(0);
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

  Real frobenius_norm() const noexcept
  {
    Real s(0);
    for (int i = 0; i < dim_; ++i)
    {
      s += num::square((*this)(i, i));
      for (int j = i + 1; j < dim_; ++j) s += Real(2) * num::square((*this)(i, j));
    }
    return num::sqrt(s);
  }

  template <RealScalar To>
  BasicSymTensor<To> cast() const
  {
    BasicSymTensor<To> out(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) out.set(i, j, static_cast<To>((*this)(i, j)));
    return out;
  }

  BasicMatrix<Real> full() const;

  BasicSymTensor& operator+=(const BasicSymTensor& o) noexcept
  {
    for (std::size_t k = 0; k < packed_.size(); ++k) packed_[k] += o.packed_[k];
    return *this;
  }

  BasicSymTensor& operator-=(const BasicSymTensor& o) noexcept
  {
    for (std::size_t k = 0; k < packed_.size(); ++k) packed_[k] -= o.packed_[k];
    return *this;
  }

  BasicSymTensor& operator*=(Real s) noexcept
  {
    for (auto& v : packed_) v *= s;
    return *this;
  }

  friend BasicSymTensor operator+(BasicSymTensor a, const BasicSymTensor& b) { return a += b; }
  friend BasicSymTensor operator-(BasicSymTensor a, const BasicSymTensor& b) { return a -= b; }
  friend BasicSymTensor operator*(BasicSymTensor a, Real s) { return a *= s; }
  friend BasicSymTensor operator*(Real s, BasicSymTensor a) { return a *= s; }

  /// Upper triangle of a*b. Exact only when a and b commute (e.g. both polynomials in C).
  friend BasicSymTensor commuting_product(const BasicSymTensor& a, const BasicSymTensor& b)
  {
    BasicSymTensor out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = i; j < a.dim_; ++j)
      {
        Real s(0);
        for (int k = 0; k < a.dim_; ++k) s += a(i, k) * b(k, j);
        out.set(i, j, s);
      }
    return out;
  }

 private:
  static constexpr std::size_t index(int i, int j) noexcept
  {
    if (i > j) std::swap(i, j);
    // row offsets of the packed 6x6 upper triangle
    constexpr std::array<int, kMaxDim> offset{0, 6, 11, 15, 18, 20};
    return static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + (j - i));
  }

  int dim_ = 0;
  std::array<Real, kMaxDim*(kMaxDim + 1) / 2> packed_{};
};

/// Dense square N x N matrix (deformation gradients, rotations, products).
template <RealScalar Real>
class BasicMatrix
{
 public:
  using value_type = Real;

  BasicMatrix() = default;

  explicit BasicMatrix(int dim) : dim_(dim)
  {
    require_supported_dim(dim);
    data_.fill(Real(0));
  }

  static BasicMatrix identity(int dim)
  {
    BasicMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Real(1);
    return m;
  }

  static BasicMatrix from_rows(int dim, std::span<const Real> row_major)
  {
    BasicMatrix m(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = row_major[static_cast<std::size_t>(i * dim + j)];
    return m;
  }

  int dim() const noexcept { return dim_; }

  Real& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(i * kMaxDim + j)]; }
  Real operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(i * kMaxDim + j)]; }

  BasicMatrix transpose() const
  {
    BasicMatrix t(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Real frobenius_norm() const noexcept
  {
    Real s(0);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) s += num::square((*this)(i, j));
    return num::sqrt(s);
  }

  /// Largest |a_ij - a_ji|.
  Real max_asymmetry() const noexcept
  {
    Real m(0);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j) m = num::max(m, num::abs((*this)(i, j) - (*this)(j, i)));
    return m;
  }

  /// (A + A^T) / 2.
  BasicSymTensor<Real> symmetric_part() const
  {
    BasicSymTensor<Real> s(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = i; j < dim_; ++j) s.set(i, j, Real(0.5) * ((*this)(i, j) + (*this)(j, i)));
    return s;
  }

  template <RealScalar To>
  BasicMatrix<To> cast() const
  {
    BasicMatrix<To> out(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) out(i, j) = static_cast<To>((*this)(i, j));
    return out;
  }

  friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b)
  {
    BasicMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j)
      {
        Real s(0);
        for (int k = 0; k < a.dim_; ++k) s += a(i, k) * b(k, j);
        out(i, j) = s;
      }
    return out;
  }

  friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b)
  {
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) a(i, j) -= b(i, j);
    return a;
  }

  friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b)
  {
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) a(i, j) += b(i, j);
    return a;
  }

  friend BasicMatrix operator*(BasicMatrix a, Real s)
  {
    for (int i = 0; i < a.dim_; ++i)
      for (int j = 0; j < a.dim_; ++j) a(i, j) *= s;
    return a;
  }

  Real trace() const noexcept
  {
    Real s(0);
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
  }

 private:
  int dim_ = 0;
  std::array<Real, kMaxDim * kMaxDim> data_{};
};

template <RealScalar Real>
BasicMatrix<Real> BasicSymTensor<Real>::full() const
{
  BasicMatrix<Real> m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
  return m;
}

template <RealScalar Real>
BasicMatrix<Real> operator*(const BasicMatrix<Real>& a, const BasicSymTensor<Real>& b)
{
  return a * b.full();
}

template <RealScalar Real>
BasicMatrix<Real> operator*(const BasicSymTensor<Real>& a, const BasicSymTensor<Real>& b)
{
  return a.full() * b.full();
}

/// F^T F, stored as its upper triangle.
template <RealScalar Real>
BasicSymTensor<Real> gram(const BasicMatrix<Real>& f)
{
  BasicSymTensor<Real> c(f.dim());
  for (int i = 0; i < f.dim(); ++i)
    for (int j = i; j < f.dim(); ++j)
    {
      Real s(0);
      for (int k = 0; k < f.dim(); ++k) s += f(k, i) * f(k, j);
      c.set(i, j, s);
    }
  return c;
}

/// Determinant by Gaussian elimination with partial pivoting.
template <RealScalar Real>
Real determinant(BasicMatrix<Real> a)
{
  const int n = a.dim();
  Real det(1);
  for (int col = 0; col < n; ++col)
  {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (num::abs(a(r, col)) > num::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == Real(0)) return Real(0);
    if (pivot != col)
    {
      for (int c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r)
    {
      const Real factor = a(r, col) / a(col, col);
      for (int c = col + 1; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

template <RealScalar Real>
Real determinant(const BasicSymTensor<Real>& a)
{
  return determinant(a.full());
}

/// Attempts a Cholesky factorization; false if any pivot is not strictly positive.
template <RealScalar Real>
bool is_positive_definite(const BasicSymTensor<Real>& a)
{
  const int n = a.dim();
  std::array<Real, kMaxDim * kMaxDim> l{};
  for (int j = 0; j < n; ++j)
  {
    Real d = a(j, j);
    for (int k = 0; k < j; ++k) d -= num::square(l[j * kMaxDim + k]);
    if (!(d > Real(0)) || !num::isfinite(d)) return false;
    const Real ljj = num::sqrt(d);
    l[j * kMaxDim + j] = ljj;
    for (int i = j + 1; i < n; ++i)
    {
      Real s = a(i, j);
      for (int k = 0; k < j; ++k) s -= l[i * kMaxDim + k] * l[j * kMaxDim + k];
      l[i * kMaxDim + j] = s / ljj;
    }
  }
  return true;
}

using SymTensor = BasicSymTensor<double>;
using Matrix = BasicMatrix<double>;

}  // namespace cfpolar

#endif

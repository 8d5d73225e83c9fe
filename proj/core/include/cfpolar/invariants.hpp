// SPDX-License-Identifier: Apache-2.0

#ifndef CFPOLAR_INVARIANTS_HPP
#define CFPOLAR_INVARIANTS_HPP

#include "cfpolar/tensor.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <span>

namespace cfpolar
{

/// Elementary symmetric functions (I_1, ..., I_N) of a tensor's eigenvalues.
template <RealScalar Real>
struct BasicPrincipalInvariants
{
  int dim = 0;
  std::array<Real, kMaxDim> values{};

  /// 1-based access matching the usual I_alpha numbering.
  Real operator()(int alpha) const noexcept { return values[static_cast<std::size_t>(alpha - 1)]; }

  std::span<const Real> view() const noexcept { return {values.data(), static_cast<std::size_t>(dim)}; }

  template <RealScalar To>
  BasicPrincipalInvariants<To> cast() const
  {
    BasicPrincipalInvariants<To> out{dim, {}};
    for (int k = 0; k < dim; ++k) out.values[k] = static_cast<To>(values[k]);
    return out;
  }

  static BasicPrincipalInvariants from_values(std::initializer_list<Real> v)
  {
    BasicPrincipalInvariants out{static_cast<int>(v.size()), {}};
    require_supported_dim(out.dim);
    std::copy(v.begin(), v.end(), out.values.begin());
    return out;
  }
};

/// Principal stretches, sorted non-increasing, all strictly positive.
template <RealScalar Real>
class BasicStretches
{
 public:
  BasicStretches() = default;

  /// Sorts the input descending; throws NotPositiveDefinite on a non-positive entry.
  explicit BasicStretches(std::span<const Real> values);
  BasicStretches(std::initializer_list<Real> values)
      : BasicStretches(std::span<const Real>(values.begin(), values.size()))
  {
  }

  int dim() const noexcept { return dim_; }
  Real operator[](int k) const noexcept { return values_[static_cast<std::size_t>(k)]; }
  std::span<const Real> view() const noexcept { return {values_.data(), static_cast<std::size_t>(dim_)}; }

 private:
  int dim_ = 0;
  std::array<Real, kMaxDim> values_{};
};

/// Elementary symmetric polynomials e_1..e_n of the given values.
template <RealScalar Real>
std::array<Real, kMaxDim> elementary_symmetric(std::span<const Real> values);

/// I_1..I_N of an SPD tensor: traces of powers through Newton's identities, I_N by pivoted elimination.
/// Throws NotPositiveDefinite if the Cholesky attempt fails.
template <RealScalar Real>
BasicPrincipalInvariants<Real> invariants_from_tensor(const BasicSymTensor<Real>& c);

/// I_1..I_N as elementary symmetric functions of the squared stretches.
template <RealScalar Real>
BasicPrincipalInvariants<Real> invariants_from_stretches(const BasicStretches<Real>& s);

/// Invariants (i_1..i_N) of U = diag(stretches): elementary symmetric functions of the stretches.
template <RealScalar Real>
BasicPrincipalInvariants<Real> stretch_symmetric_functions(const BasicStretches<Real>& s);

/// c_0 I + c_1 C + ... + c_k C^k by Horner's rule; requires k <= dim - 1.
template <RealScalar Real>
BasicSymTensor<Real> mat_poly(const BasicSymTensor<Real>& c, std::span<const Real> coeffs);

template <RealScalar Real>
BasicSymTensor<Real> mat_poly(const BasicSymTensor<Real>& c, std::initializer_list<Real> coeffs)
{
  return mat_poly(c, std::span<const Real>(coeffs.begin(), coeffs.size()));
}

/// I_k / I_1^k: invariants of C / I_1, so the normalized I_1 is 1.
template <RealScalar Real>
BasicPrincipalInvariants<Real> normalized_invariants(const BasicPrincipalInvariants<Real>& inv)
{
  BasicPrincipalInvariants<Real> out{inv.dim, {}};
  const Real base = inv(1);
  Real power = base;
  for (int k = 0; k < inv.dim; ++k)
  {
    out.values[static_cast<std::size_t>(k)] = inv.values[static_cast<std::size_t>(k)] / power;
    power *= base;
  }
  out.values[0] = Real(1);
  return out;
}

/// x^N - I_1 x^{N-1} + ... + (-1)^N I_N.
template <RealScalar Real>
Real characteristic_polynomial(const BasicPrincipalInvariants<Real>& inv, Real x);

using PrincipalInvariants = BasicPrincipalInvariants<double>;
using Stretches = BasicStretches<double>;

}  // namespace cfpolar

#endif

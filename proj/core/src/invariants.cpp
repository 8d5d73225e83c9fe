// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/invariants.hpp"

#include <algorithm>
#include <functional>

namespace cfpolar
{

template <RealScalar Real>
BasicStretches<Real>::BasicStretches(std::span<const Real> values) : dim_(static_cast<int>(values.size()))
{
  require_supported_dim(dim_);
  std::copy(values.begin(), values.end(), values_.begin());
  std::sort(values_.begin(), values_.begin() + dim_, std::greater<>());
  if (!(values_[static_cast<std::size_t>(dim_ - 1)] > Real(0)))
    throw Error(ErrorCode::not_positive_definite, "stretches must be strictly positive");
}

template <RealScalar Real>
std::array<Real, kMaxDim> elementary_symmetric(std::span<const Real> values)
{
  // e[k] after processing m values holds e_k(x_1..x_m); update from the top down.
  std::array<Real, kMaxDim + 1> e{};
  e[0] = Real(1);
  int m = 0;
  for (Real x : values)
  {
    ++m;
    for (int k = m; k >= 1; --k) e[k] += x * e[k - 1];
  }
  std::array<Real, kMaxDim> out{};
  for (int k = 0; k < kMaxDim; ++k) out[k] = e[k + 1];
  return out;
}

template <RealScalar Real>
BasicPrincipalInvariants<Real> invariants_from_tensor(const BasicSymTensor<Real>& c)
{
  const int n = c.dim();
  require_supported_dim(n);
  if (!is_positive_definite(c))
    throw Error(ErrorCode::not_positive_definite, "tensor is not symmetric positive-definite");

  // power sums p_k = tr(C^k), k = 1..N-1
  std::array<Real, kMaxDim> power_sum{};
  BasicSymTensor<Real> power = c;
  power_sum[0] = c.trace();
  for (int k = 2; k < n; ++k)
  {
    power = commuting_product(power, c);
    power_sum[k - 1] = power.trace();
  }

  BasicPrincipalInvariants<Real> inv{n, {}};
  // Newton: k e_k = sum_{j=1}^{k} (-1)^{j-1} e_{k-j} p_j
  std::array<Real, kMaxDim + 1> e{};
  e[0] = Real(1);
  for (int k = 1; k < n; ++k)
  {
    Real s(0);
    for (int j = 1; j <= k; ++j)
    {
      const Real term = e[k - j] * power_sum[j - 1];
      s += (j % 2 == 1) ? term : -term;
    }
    e[k] = s / Real(k);
    inv.values[k - 1] = e[k];
  }
  inv.values[n - 1] = determinant(c);
  return inv;
}

template <RealScalar Real>
BasicPrincipalInvariants<Real> invariants_from_stretches(const BasicStretches<Real>& s)
{
  std::array<Real, kMaxDim> squared{};
  for (int k = 0; k < s.dim(); ++k) squared[k] = s[k] * s[k];
  return {s.dim(), elementary_symmetric(std::span<const Real>(squared.data(), static_cast<std::size_t>(s.dim())))};
}

template <RealScalar Real>
BasicPrincipalInvariants<Real> stretch_symmetric_functions(const BasicStretches<Real>& s)
{
  return {s.dim(), elementary_symmetric(s.view())};
}

template <RealScalar Real>
BasicSymTensor<Real> mat_poly(const BasicSymTensor<Real>& c, std::span<const Real> coeffs)
{
  const int n = c.dim();
  if (coeffs.empty()) return BasicSymTensor<Real>(n);
  if (static_cast<int>(coeffs.size()) > n)
    throw Error(ErrorCode::dim_mismatch, "matrix polynomial degree exceeds dim - 1");

  auto k = coeffs.size() - 1;
  auto acc = BasicSymTensor<Real>::scaled_identity(n, coeffs[k]);
  while (k-- > 0)
  {
    acc = commuting_product(acc, c);
    for (int i = 0; i < n; ++i) acc.set(i, i, acc(i, i) + coeffs[k]);
  }
  return acc;
}

template <RealScalar Real>
Real characteristic_polynomial(const BasicPrincipalInvariants<Real>& inv, Real x)
{
  Real acc(1);
  for (int k = 1; k <= inv.dim; ++k)
  {
    const Real coeff = (k % 2 == 1) ? -inv(k) : inv(k);
    acc = acc * x + coeff;
  }
  return acc;
}

#define CFPOLAR_INSTANTIATE(Real)                                                                   \
  template class BasicStretches<Real>;                                                              \
  template std::array<Real, kMaxDim> elementary_symmetric<Real>(std::span<const Real>);             \
  template BasicPrincipalInvariants<Real> invariants_from_tensor<Real>(const BasicSymTensor<Real>&); \
  template BasicPrincipalInvariants<Real> invariants_from_stretches<Real>(const BasicStretches<Real>&); \
  template BasicPrincipalInvariants<Real> stretch_symmetric_functions<Real>(const BasicStretches<Real>&); \
  template BasicSymTensor<Real> mat_poly<Real>(const BasicSymTensor<Real>&, std::span<const Real>);  \
  template Real characteristic_polynomial<Real>(const BasicPrincipalInvariants<Real>&, Real);

CFPOLAR_INSTANTIATE(double)
CFPOLAR_INSTANTIATE(long double)
CFPOLAR_INSTANTIATE(quad)

#undef CFPOLAR_INSTANTIATE

}  // namespace cfpolar

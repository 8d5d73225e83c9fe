// SPDX-License-Identifier: Apache-2.0

#include "cfpolar/high_dim.hpp"

#include <cstddef>
#include <optional>
#include <utility>

namespace cfpolar
{

namespace
{
  // Relative padding of the upper bracket end so an exact root at the power-mean bound is interior.
  constexpr double kBracketPad = 1e-3;
  constexpr double kBranchTol = 1e-6;
  constexpr double kIdentityTol = 1e-8;
  constexpr double kCollisionTol = 1e-8;

  template <class S, RealScalar Real, std::size_t N>
  S horner(const std::array<Real, N>& ascending, S x)
  {
    S acc(ascending[N - 1]);
    for (std::size_t k = N - 1; k-- > 0;) acc = acc * x + S(ascending[k]);
    return acc;
  }

  template <RealScalar Real, std::size_t A, std::size_t B>
  std::array<Real, A + B - 1> convolve(const std::array<Real, A>& a, const std::array<Real, B>& b)
  {
    std::array<Real, A + B - 1> out{};
    for (std::size_t i = 0; i < A; ++i)
      for (std::size_t j = 0; j < B; ++j) out[i + j] += a[i] * b[j];
    return out;
  }

  /// Scales normalized values i^_k back by I1^{k/2}.
  template <RealScalar Real>
  void denormalize(BasicStretchInvariants<Real>& out, Real i1_scale)
  {
    const Real root = num::sqrt(i1_scale);
    Real factor = root;
    for (int k = 0; k < out.dim; ++k)
    {
      out.values[static_cast<std::size_t>(k)] *= factor;
      factor *= root;
    }
  }

  // ---- dim 6 recovery in normalized units

  template <RealScalar Real>
  struct N6Candidate
  {
    std::array<Real, kMaxDim> i{};
    Real residual{};
  };

  template <RealScalar Real>
  std::optional<N6Candidate<Real>> assemble_n6(const BasicPrincipalInvariants<Real>& In, Real w, Real i4)
  {
    const Real i6 = num::sqrt(In(6));
    const Real radicand = In(5) + Real(2) * i4 * i6;
    if (!(radicand >= Real(0)) || !num::isfinite(i4)) return std::nullopt;
    N6Candidate<Real> c;
    const Real i1 = num::sqrt(w);
    const Real i2 = (w - Real(1)) / Real(2);
    c.i = {i1, i2, (i2 * i2 - In(2) + Real(2) * i4) / (Real(2) * i1), i4, num::sqrt(radicand), i6};
    c.residual = identity_system_residual(In, std::span<const Real>(c.i.data(), 6));
    return c;
  }

  template <RealScalar Real>
  std::optional<N6Candidate<Real>> quartic_candidate(const BasicPrincipalInvariants<Real>& In, Real w)
  {
    const N6ElimState<Real> st = n6_elimination_state(In, w);
    const Real b2 = st.b2, b4 = st.b4, b6 = st.b6, b8 = st.b8;
    const QuarticReduced<Real> depressed{b4 - Real(3) * b2 * b2 / Real(8), b6 - b2 * b4 / Real(2) + b2 * b2 * b2 / Real(8),
        b8 - b2 * b6 / Real(4) + b2 * b2 * b4 / Real(16) - Real(3) * b2 * b2 * b2 * b2 / Real(256)};
    RootSet<Real> roots;
    try
    {
      roots = solve_reduced_quartic(depressed);
    }
    catch (const Error&)
    {
      return std::nullopt;
    }
    std::optional<N6Candidate<Real>> best;
    for (Real y : roots)
    {
      auto c = assemble_n6(In, w, y - b2 / Real(4));
      if (c && (!best || c->residual < best->residual)) best = c;
    }
    return best;
  }

  /// One Newton step on the identity system I(i) = I; kept only if it lowers the residual.
  template <RealScalar Real>
  void polish_identity_system(const BasicPrincipalInvariants<Real>& In, BasicStretchInvariants<Real>& out)
  {
    const int n = out.dim;
    const auto at = [&](int j) { return j == 0 ? Real(1) : (j <= n ? out.values[static_cast<std::size_t>(j - 1)] : Real(0)); };
    std::array<std::array<Real, kMaxDim + 1>, kMaxDim> m{};
    for (int k = 1; k <= n; ++k)
    {
      Real f(0);
      for (int j = 0; j <= 2 * k; ++j) f += ((j + k) % 2 ? -at(j) : at(j)) * at(2 * k - j);
      auto& row = m[static_cast<std::size_t>(k - 1)];
      row[static_cast<std::size_t>(n)] = In(k) - f;
      // dI_k/di_j = 2 (-1)^{j+k} i_{2k-j}
      for (int j = 1; j <= n; ++j)
        row[static_cast<std::size_t>(j - 1)] = (2 * k - j < 0) ? Real(0) : Real((j + k) % 2 ? -2 : 2) * at(2 * k - j);
    }
    for (int c = 0; c < n; ++c)
    {
      int p = c;
      for (int r = c + 1; r < n; ++r)
        if (num::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) > num::abs(m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)])) p = r;
      std::swap(m[static_cast<std::size_t>(c)], m[static_cast<std::size_t>(p)]);
      const auto& pivot = m[static_cast<std::size_t>(c)];
      if (pivot[static_cast<std::size_t>(c)] == Real(0)) return;
      for (int r = c + 1; r < n; ++r)
      {
        auto& row = m[static_cast<std::size_t>(r)];
        const Real factor = row[static_cast<std::size_t>(c)] / pivot[static_cast<std::size_t>(c)];
        for (int k = c; k <= n; ++k) row[static_cast<std::size_t>(k)] -= factor * pivot[static_cast<std::size_t>(k)];
      }
    }
    BasicStretchInvariants<Real> next = out;
    for (int r = n - 1; r >= 0; --r)
    {
      const auto& row = m[static_cast<std::size_t>(r)];
      Real v = row[static_cast<std::size_t>(n)];
      for (int k = r + 1; k < n; ++k) v -= row[static_cast<std::size_t>(k)] * (next.values[static_cast<std::size_t>(k)] - out.values[static_cast<std::size_t>(k)]);
      next.values[static_cast<std::size_t>(r)] = out.values[static_cast<std::size_t>(r)] + v / row[static_cast<std::size_t>(r)];
    }
    const auto residual = [&](const BasicStretchInvariants<Real>& s) {
      return identity_system_residual(In, std::span<const Real>(s.values.data(), static_cast<std::size_t>(n)));
    };
    for (Real v : next.values)
      if (!num::isfinite(v)) return;
    if (residual(next) < residual(out)) out.values = next.values;
  }
}  // namespace

// ---------------------------------------------------------------------------
// dim 5

template <RealScalar Real>
N5PolyParts<Real> n5_poly_parts(const BasicPrincipalInvariants<Real>& I)
{
  if (I.dim != 5) throw Error(ErrorCode::dim_mismatch, "dim-5 polynomial needs five invariants");
  const Real I1 = I(1), I2 = I(2), I3 = I(3), I4 = I(4), I5 = I(5);
  const Real s5 = num::sqrt(I5);
  const Real m = I1 * I1 - Real(4) * I2;
  N5PolyParts<Real> p;
  p.R = {Real(4) * I5, m * s5, Real(4) * I4, Real(-2) * I1 * s5, Real(0), s5};
  p.S = {Real(-8) * s5, -m, Real(0), Real(-2) * I1, Real(0), Real(3)};
  p.T = {Real(128) * I5, Real(32) * m * s5, m * m + Real(64) * I4, Real(0),
      Real(-4) * (I1 * I1 * I1 - Real(4) * I1 * I2 + Real(16) * I3), Real(96) * s5, Real(6) * I1 * I1 - Real(8) * I2,
      Real(0), Real(-4) * I1, Real(0), Real(1)};
  return p;
}

template <RealScalar Real>
std::array<Real, 21> n5_composite(const N5PolyParts<Real>& parts)
{
  std::array<Real, 21> out = convolve(parts.T, parts.T);
  const auto s2r = convolve(convolve(parts.S, parts.S), parts.R);
  for (std::size_t k = 0; k < s2r.size(); ++k) out[k] -= Real(64) * s2r[k];
  return out;
}

template <RealScalar Real>
std::array<Real, 17> n5_deflated(const BasicPrincipalInvariants<Real>& I)
{
  const auto composite = n5_composite(n5_poly_parts(normalized_invariants(I)));
  std::array<Real, 17> out{};
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = composite[k + 4];
  return out;
}

template <RealScalar Real>
Real n5_poly_eval(const BasicPrincipalInvariants<Real>& I, Real x)
{
  return horner(n5_deflated(I), x / num::sqrt(I(1)));
}

template <RealScalar Real>
Real n5_poly_magnitude(const BasicPrincipalInvariants<Real>& I, Real x)
{
  const auto coeffs = n5_deflated(I);
  const Real xn = num::abs(x / num::sqrt(I(1)));
  Real acc(0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * xn + num::abs(coeffs[k]);
  return acc;
}

template <RealScalar Real>
BasicStretchInvariants<Real> n5_stretch_invariants(const BasicPrincipalInvariants<Real>& I)
{
  validate_invariants(I, 5);
  const BasicPrincipalInvariants<Real> In = normalized_invariants(I);
  const auto coeffs = n5_deflated(I);
  auto f = [&](Real x) {
    const Dual<Real> d = horner(coeffs, Dual<Real>::variable(x));
    return ValueSlope<Real>{d.v, d.d};
  };
  const Real i1 = largest_root_bracketed(f, Real(1), num::sqrt(Real(5)) * (Real(1) + Real(kBracketPad)));
  const Real i2 = (i1 * i1 - Real(1)) / Real(2);
  const Real i5 = num::sqrt(In(5));

  // i4 = A + i1 i3 from the second identity; i4^2 = I4 + 2 i3 i5 gives a quadratic in i3.
  const Real A = (In(2) - i2 * i2) / Real(2);
  const Real qa = i1 * i1;
  const Real qb = Real(2) * A * i1 - Real(2) * i5;
  const Real qc = A * A - In(4);
  const Real disc = num::max(qb * qb - Real(4) * qa * qc, Real(0));
  const Real qq = Real(-0.5) * (qb + (qb < Real(0) ? -num::sqrt(disc) : num::sqrt(disc)));
  std::array<Real, 2> i3_candidates{qq / qa, qq != Real(0) ? qc / qq : qq / qa};

  BasicStretchInvariants<Real> out{5, {}, Route::poly16_n5};
  Real best = Real(-1);
  for (Real i3 : i3_candidates)
  {
    const Real i4 = A + i1 * i3;
    const Real terms[] = {i3 * i3, -In(3), Real(-2) * i2 * i4, Real(2) * i1 * i5};
    Real sum(0), scale(0);
    for (Real t : terms)
    {
      sum += t;
      scale += num::abs(t);
    }
    const Real residual = num::abs(sum) / scale;
    if (best < Real(0) || residual < best)
    {
      best = residual;
      out.values = {i1, i2, i3, i4, i5, Real(0)};
    }
  }
  if (best > Real(kBranchTol))
    throw Error(ErrorCode::branch_ambiguous, "neither i3 branch satisfies the third identity");
  // A dominant stretch clusters 8 roots near i1, which limits the accuracy of the root alone.
  polish_identity_system(In, out);
  denormalize(out, I(1));
  return out;
}

template <RealScalar Real>
std::vector<Real> n5_scan_roots(const BasicPrincipalInvariants<Real>& I, Real lo, Real hi)
{
  const auto coeffs = n5_deflated(I);
  const Real scale = num::sqrt(I(1));
  auto f = [&](Real x) {
    const Dual<Real> d = horner(coeffs, Dual<Real>::variable(x));
    return ValueSlope<Real>{d.v, d.d};
  };
  std::vector<Real> roots = scan_sign_changes(f, lo / scale, hi / scale);
  for (Real& r : roots) r *= scale;
  return roots;
}

// ---------------------------------------------------------------------------
// dim 6

template <RealScalar Real>
Real n6_e32_eval(const BasicPrincipalInvariants<Real>& I, Real w)
{
  return n6_e32_from_state(n6_elimination_state(normalized_invariants(I), w / I(1)));
}

template <RealScalar Real>
Real n6_e32_magnitude(const BasicPrincipalInvariants<Real>& I, Real w)
{
  const auto In = normalized_invariants(I);
  return n6_e32_from_state(n6_elimination_state(In, TermScale<Real>(w / I(1)))).m;
}

template <RealScalar Real>
N6SpuriousCubic<Real> n6_spurious_cubic(const BasicPrincipalInvariants<Real>& I)
{
  if (I.dim != 6) throw Error(ErrorCode::dim_mismatch, "spurious cubic needs six invariants");
  const Real I1 = I(1), I2 = I(2), I3 = I(3);
  N6SpuriousCubic<Real> out;
  out.coeffs = {Real(11), Real(-7) * I1, Real(5) * I1 * I1 - Real(12) * I2,
      -(I1 * I1 * I1 - Real(4) * I1 * I2 + Real(8) * I3 + Real(16) * num::sqrt(I(6)))};
  out.roots = solve_cubic(out.coeffs[0], out.coeffs[1], out.coeffs[2], out.coeffs[3]);
  return out;
}

template <RealScalar Real>
Real n6_i4_from_quartic(const BasicPrincipalInvariants<Real>& I, Real w)
{
  validate_invariants(I, 6);
  const auto c = quartic_candidate(normalized_invariants(I), w / I(1));
  if (!c) throw Error(ErrorCode::d12_degenerate, "quartic in i4 has no admissible real root");
  return c->i[3] * I(1) * I(1);
}

template <RealScalar Real>
BasicStretchInvariants<Real> n6_stretch_invariants(const BasicPrincipalInvariants<Real>& I)
{
  validate_invariants(I, 6);
  const BasicPrincipalInvariants<Real> In = normalized_invariants(I);
  auto f = [&](Real w) {
    const Dual<Real> e = n6_e32_from_state(n6_elimination_state(In, Dual<Real>::variable(w)));
    return ValueSlope<Real>{e.v, e.d};
  };
  const Real w = largest_root_bracketed(f, Real(1), Real(6) * (Real(1) + Real(kBracketPad)));

  BasicStretchInvariants<Real> out{6, {}, Route::poly32_n6};
  std::optional<N6Candidate<Real>> chosen;
  const N6ElimState<TermScale<Real>> st = n6_elimination_state(In, TermScale<Real>(w));
  const bool d12_small = num::abs(st.d12.v) <= Real(1e12) * num::epsilon<Real>() * st.d12.m;
  if (!d12_small) chosen = assemble_n6(In, w, -st.d14.v / st.d12.v);
  if (!chosen || chosen->residual > Real(kIdentityTol))
  {
    const auto fallback = quartic_candidate(In, w);
    if (fallback && (!chosen || fallback->residual < chosen->residual))
    {
      chosen = fallback;
      out.quartic_fallback = true;
    }
  }
  if (!chosen) throw Error(ErrorCode::d12_degenerate, "d12 vanishes at the root and the i4 quartic has no admissible root");

  const auto spurious = n6_spurious_cubic(In);
  for (Real r : spurious.roots.real)
    if (num::abs(w - r) <= Real(kCollisionTol) * w && chosen->residual > Real(kIdentityTol))
      throw Error(ErrorCode::spurious_collision, "largest root coincides with a spurious-cubic root");

  out.values = chosen->i;
  polish_identity_system(In, out);
  denormalize(out, I(1));
  return out;
}

template <RealScalar Real>
std::vector<Real> n6_scan_roots(const BasicPrincipalInvariants<Real>& I, Real lo, Real hi)
{
  const BasicPrincipalInvariants<Real> In = normalized_invariants(I);
  auto f = [&](Real w) {
    const Dual<Real> e = n6_e32_from_state(n6_elimination_state(In, Dual<Real>::variable(w)));
    return ValueSlope<Real>{e.v, e.d};
  };
  std::vector<Real> roots = scan_sign_changes(f, lo / I(1), hi / I(1));
  for (Real& r : roots) r *= I(1);
  return roots;
}

#define CFPOLAR_INSTANTIATE(Real)                                                                      \
  template N5PolyParts<Real> n5_poly_parts<Real>(const BasicPrincipalInvariants<Real>&);               \
  template std::array<Real, 21> n5_composite<Real>(const N5PolyParts<Real>&);                          \
  template std::array<Real, 17> n5_deflated<Real>(const BasicPrincipalInvariants<Real>&);              \
  template Real n5_poly_eval<Real>(const BasicPrincipalInvariants<Real>&, Real);                       \
  template Real n5_poly_magnitude<Real>(const BasicPrincipalInvariants<Real>&, Real);                  \
  template BasicStretchInvariants<Real> n5_stretch_invariants<Real>(const BasicPrincipalInvariants<Real>&); \
  template std::vector<Real> n5_scan_roots<Real>(const BasicPrincipalInvariants<Real>&, Real, Real);   \
  template Real n6_e32_eval<Real>(const BasicPrincipalInvariants<Real>&, Real);                        \
  template Real n6_e32_magnitude<Real>(const BasicPrincipalInvariants<Real>&, Real);                   \
  template N6SpuriousCubic<Real> n6_spurious_cubic<Real>(const BasicPrincipalInvariants<Real>&);       \
  template Real n6_i4_from_quartic<Real>(const BasicPrincipalInvariants<Real>&, Real);                 \
  template BasicStretchInvariants<Real> n6_stretch_invariants<Real>(const BasicPrincipalInvariants<Real>&); \
  template std::vector<Real> n6_scan_roots<Real>(const BasicPrincipalInvariants<Real>&, Real, Real);

CFPOLAR_INSTANTIATE(double)
CFPOLAR_INSTANTIATE(long double)
CFPOLAR_INSTANTIATE(quad)

#undef CFPOLAR_INSTANTIATE

}  // namespace cfpolar

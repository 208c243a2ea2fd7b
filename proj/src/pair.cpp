#include "nodalk/pair.hpp"

#include "nodalk/errors.hpp"

namespace nodalk {

void PairNumerics::validate() const {
  if (r < 1)
    throw InvariantError("rank must satisfy r >= 1 (got r=" + std::to_string(r) + ")");
  if (k < r + 1)
    throw InvariantError("generated pair needs k >= r + 1 (got k=" + std::to_string(k) +
                         ", r=" + std::to_string(r) + ")");
  if (d1 < 0 || d2 < 0)
    throw InvariantError("restrictions of a generated bundle have d_i >= 0");
  for (const auto& s : {s1, s2}) {
    if (s && *s < 0)
      throw InvariantError("s_j = dim(V ∩ H^0(E_j(-p))) must be nonnegative");
    if (s && *s > k)
      throw InvariantError("s_j cannot exceed k = dim V");
  }
}

std::optional<std::int64_t> PairNumerics::restricted_dim(Side i) const {
  auto sj = s(other(i));
  if (!sj)
    return std::nullopt;
  return k - *sj;
}

KernelNumerics kernel_numerics(const PairNumerics& p, const CurveData& c) {
  p.validate();
  const std::int64_t m = p.kernel_rank();
  KernelNumerics out;
  out.rank = m;
  out.chi = checked_sub(checked_mul(m, 1 - c.arithmetic_genus()), checked_add(p.d1, p.d2));
  out.chi_restriction_1 = checked_sub(checked_mul(m, 1 - c.g1()), p.d1);
  out.chi_restriction_2 = checked_sub(checked_mul(m, 1 - c.g2()), p.d2);
  return out;
}

DepthOneNumerics kernel_depth_one(const PairNumerics& p) {
  p.validate();
  const int m = static_cast<int>(p.kernel_rank());
  return DepthOneNumerics::vector_bundle(m, -p.d1, -p.d2);
}

bool slope_above_canonical(int g, int r, std::int64_t d) {
  return d > checked_mul(r, 2 * g - 2);
}

std::int64_t h0_semistable_bound(int g, int r, std::int64_t d) {
  if (g < 2 || r < 1)
    throw InvariantError("h0 bound needs g >= 2 and r >= 1");
  if (d < 0)
    return 0;
  if (slope_above_canonical(g, r, d))
    return chi_component(d, r, g);
  return d / 2 + r;
}

std::int64_t h0_total(std::int64_t h0_1, std::int64_t h0_2, int r) {
  std::int64_t out = checked_sub(checked_add(h0_1, h0_2), r);
  if (out < 0)
    throw InvariantError("h^0(E1) + h^0(E2) - r is negative");
  return out;
}

std::int64_t h0_twist_down(std::int64_t h0_i, int r) {
  std::int64_t out = checked_sub(h0_i, r);
  if (out < 0)
    throw InvariantError("a globally generated rank-r bundle has h^0 >= r");
  return out;
}

std::string to_string(ClaimCase c) {
  switch (c) {
  case ClaimCase::BothAboveCanonical:
    return "case1";
  case ClaimCase::Mixed:
    return "case2";
  case ClaimCase::BothClifford:
    return "case3";
  }
  return "?";
}

ClaimResult claim_check(const PairNumerics& p, const CurveData& c) {
  p.validate();
  const bool above1 = slope_above_canonical(c.g1(), p.r, p.d1);
  const bool above2 = slope_above_canonical(c.g2(), p.r, p.d2);

  ClaimResult out;
  if (above1 && above2)
    out.which = ClaimCase::BothAboveCanonical;
  else if (above1 || above2)
    out.which = ClaimCase::Mixed;
  else
    out.which = ClaimCase::BothClifford;

  if ((!above1 && p.d1 < 1) || (!above2 && p.d2 < 1))
    throw HypothesisError("Clifford-side restriction needs d_i >= 1 (" + to_string(out.which) +
                          ", d=(" + std::to_string(p.d1) + "," + std::to_string(p.d2) + "))");

  out.h0_bound_1 = h0_semistable_bound(c.g1(), p.r, p.d1);
  out.h0_bound_2 = h0_semistable_bound(c.g2(), p.r, p.d2);
  out.h0_bound = h0_total(out.h0_bound_1, out.h0_bound_2, p.r);
  out.target = checked_add(checked_add(p.d1, p.d2), p.r);
  out.k_within_bound = p.k <= out.h0_bound;
  out.bound_below_target = out.h0_bound < out.target;
  return out;
}

std::int64_t brill_noether_rho(int g, std::int64_t d, std::int64_t k) {
  if (g < 2 || k < 1)
    throw InvariantError("Brill–Noether number needs g >= 2 and k >= 1");
  return checked_sub(g, checked_mul(k, checked_add(checked_sub(g, d), k - 1)));
}

bool gkd_nonempty_general(int g, std::int64_t d, std::int64_t k) {
  if (g < 2 || k < 1)
    throw InvariantError("linear series threshold needs g >= 2 and k >= 1");
  return Rat(d) >= Rat(g) + Rat(k - 1) - Rat(g, k);
}

} // namespace nodalk

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nodalk/curve.hpp"

namespace nodalk {

/*
 * Invariants of a generated pair (E, V): E of rank r with component degrees
 * d1, d2 and V of dimension k.  s1, s2, when known, are
 *     s_j = dim(V ∩ H^0(E_j(-p))).
 * The restricted pair on component i then has k_i = k - s_j (j != i).
 */
struct PairNumerics {
  int r = 1;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t k = 2;
  std::optional<std::int64_t> s1;
  std::optional<std::int64_t> s2;

  /// Throws InvariantError on r < 1, k < r + 1, d_i < 0 or negative s_j.
  void validate() const;

  std::int64_t degree(Side s) const { return s == Side::One ? d1 : d2; }
  std::optional<std::int64_t> s(Side side) const { return side == Side::One ? s1 : s2; }
  /// dim V_i = k - s_j, when s_j is known.
  std::optional<std::int64_t> restricted_dim(Side i) const;
  std::int64_t kernel_rank() const { return k - r; }

  friend bool operator==(const PairNumerics&, const PairNumerics&) = default;
};

/// Rank and Euler characteristics of M_{E,V} and of its component kernels.
struct KernelNumerics {
  std::int64_t rank = 0;
  std::int64_t chi = 0;
  std::int64_t chi_restriction_1 = 0;
  std::int64_t chi_restriction_2 = 0;

  std::int64_t chi_restriction(Side s) const {
    return s == Side::One ? chi_restriction_1 : chi_restriction_2;
  }

  friend bool operator==(const KernelNumerics&, const KernelNumerics&) = default;
};

KernelNumerics kernel_numerics(const PairNumerics& p, const CurveData& c);

/// The kernel bundle as a depth-one sheaf: rank k - r, degrees -d1, -d2.
DepthOneNumerics kernel_depth_one(const PairNumerics& p);

/*
 * Upper bound on h^0 of a semistable rank-r bundle of degree d on a smooth
 * curve of genus g:
 *   d < 0                  -> 0
 *   0 <= d/r <= 2g - 2     -> floor(d/2) + r        (Xiao–Clifford)
 *   d/r > 2g - 2           -> d + r(1 - g)          (exact, h^1 = 0)
 */
std::int64_t h0_semistable_bound(int g, int r, std::int64_t d);

/// True when d/r > 2g - 2, i.e. the Riemann–Roch value is exact.
bool slope_above_canonical(int g, int r, std::int64_t d);

/// h^0(E) = h^0(E1) + h^0(E2) - r for globally generated restrictions.
std::int64_t h0_total(std::int64_t h0_1, std::int64_t h0_2, int r);

/// h^0(E_i(-p)) = h^0(E_i) - r for a globally generated restriction.
std::int64_t h0_twist_down(std::int64_t h0_i, int r);

enum class ClaimCase : int {
  BothAboveCanonical = 1, // Riemann–Roch on both components
  Mixed = 2,              // Riemann–Roch on one, Clifford on the other
  BothClifford = 3,       // Clifford on both
};

std::string to_string(ClaimCase c);

struct ClaimResult {
  ClaimCase which;
  std::int64_t h0_bound_1 = 0;
  std::int64_t h0_bound_2 = 0;
  std::int64_t h0_bound = 0;      // bound on h^0(E) >= k
  std::int64_t target = 0;        // d1 + d2 + r
  bool k_within_bound = false;    // k <= h0_bound
  bool bound_below_target = false;// every admissible k satisfies k < target
  /// k <= h0_bound implies k < d1 + d2 + r.
  bool certified() const { return !k_within_bound || bound_below_target; }
};

/*
 * Bounds k <= h^0(E) = h^0(E1) + h^0(E2) - r by cases on the slopes of the
 * (assumed semistable) restrictions and checks k < d1 + d2 + r.
 *
 * Throws HypothesisError when a Clifford-side restriction has d_i < 1; the
 * Clifford estimate only beats the target when d_i >= 1.
 */
ClaimResult claim_check(const PairNumerics& p, const CurveData& c);

/// g - k(g - d + k - 1).
std::int64_t brill_noether_rho(int g, std::int64_t d, std::int64_t k);

/// d >= g + k - 1 - g/k, compared as exact rationals.
bool gkd_nonempty_general(int g, std::int64_t d, std::int64_t k);

} // namespace nodalk

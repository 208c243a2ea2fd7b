#pragma once

#include <cstdint>

#include "nodalk/rational.hpp"

namespace nodalk {

/// Component index on the two-component curve.
enum class Side : int { One = 1, Two = 2 };

constexpr Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }
constexpr int index(Side s) { return static_cast<int>(s) - 1; }

/// Two smooth components of genus g1, g2 >= 2 meeting at a single node.
class CurveData {
public:
  CurveData(int g1, int g2);

  int g1() const { return g1_; }
  int g2() const { return g2_; }
  int genus(Side s) const { return s == Side::One ? g1_ : g2_; }
  int arithmetic_genus() const { return g1_ + g2_; }

  friend bool operator==(const CurveData&, const CurveData&) = default;

private:
  int g1_;
  int g2_;
};

/*
 * Numerical shadow of a depth-one sheaf: relative ranks and degrees on each
 * component, plus the rank of the identification of fibres at the node.
 *
 * A vector bundle of rank r has r1 = r2 = glue_rank = r.  A sheaf pushed
 * forward from one component has the other rank zero and glue_rank zero.
 */
struct DepthOneNumerics {
  int r1 = 0;
  int r2 = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  int glue_rank = 0;

  /// Throws InvariantError unless 0 <= glue_rank <= min(r1,r2) and r1+r2 >= 1.
  void validate() const;
  bool is_vector_bundle() const { return r1 == r2 && r1 == glue_rank && r1 >= 1; }

  int rank(Side s) const { return s == Side::One ? r1 : r2; }
  std::int64_t degree(Side s) const { return s == Side::One ? d1 : d2; }

  static DepthOneNumerics vector_bundle(int r, std::int64_t d1, std::int64_t d2);

  friend bool operator==(const DepthOneNumerics&, const DepthOneNumerics&) = default;
};

/// Weights (w1, 1 - w1) with 0 < w1 < 1.
class Polarization {
public:
  explicit Polarization(Rat w1);

  const Rat& w1() const { return w1_; }
  Rat w2() const { return Rat(1) - w1_; }
  Rat weight(Side s) const { return s == Side::One ? w1_ : w2(); }

private:
  Rat w1_;
};

/// Euler characteristic d + r(1 - g) of a rank-r, degree-d bundle on a genus-g curve.
std::int64_t chi_component(std::int64_t d, std::int64_t r, int g);

/// chi(E1) + chi(E2) - glue_rank.
std::int64_t chi_total(const DepthOneNumerics& e, const CurveData& c);

std::int64_t chi_restriction(const DepthOneNumerics& e, const CurveData& c, Side s);

/// chi(E) / (w1 r1 + w2 r2).
Rat polarized_slope(const DepthOneNumerics& e, const CurveData& c, const Polarization& w);

/*
 * Polarizations w1 in (0,1) satisfying
 *     w_i chi(E) <= chi(E_i) <= w_i chi(E) + r     for i = 1, 2.
 *
 * The inequalities are non-strict; the clipping to (0,1) is strict.  The
 * window is necessary for w-semistability of a vector bundle and sufficient
 * when both restrictions are semistable.
 */
RatInterval teixidor_window(const DepthOneNumerics& e, const CurveData& c);

} // namespace nodalk

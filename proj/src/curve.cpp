#include "nodalk/curve.hpp"

#include <algorithm>
#include <string>

#include "nodalk/errors.hpp"

namespace nodalk {

CurveData::CurveData(int g1, int g2) : g1_(g1), g2_(g2) {
  if (g1 < 2 || g2 < 2)
    throw InvariantError("component genera must satisfy g_i >= 2 (got g1=" +
                         std::to_string(g1) + ", g2=" + std::to_string(g2) + ")");
}

void DepthOneNumerics::validate() const {
  if (r1 < 0 || r2 < 0)
    throw InvariantError("relative ranks must be nonnegative");
  if (r1 + r2 < 1)
    throw InvariantError("relative ranks r1 = r2 = 0 describe a torsion sheaf");
  if (glue_rank < 0 || glue_rank > std::min(r1, r2))
    throw InvariantError("glue rank must lie in [0, min(r1, r2)]");
}

DepthOneNumerics DepthOneNumerics::vector_bundle(int r, std::int64_t d1, std::int64_t d2) {
  DepthOneNumerics e{r, r, d1, d2, r};
  e.validate();
  return e;
}

Polarization::Polarization(Rat w1) : w1_(w1) {
  if (w1 <= Rat(0) || w1 >= Rat(1))
    throw InvariantError("polarization weight must satisfy 0 < w1 < 1 (got " + w1.str() + ")");
}

std::int64_t chi_component(std::int64_t d, std::int64_t r, int g) {
  return checked_add(d, checked_mul(r, 1 - g));
}

std::int64_t chi_restriction(const DepthOneNumerics& e, const CurveData& c, Side s) {
  return chi_component(e.degree(s), e.rank(s), c.genus(s));
}

std::int64_t chi_total(const DepthOneNumerics& e, const CurveData& c) {
  e.validate();
  return checked_sub(checked_add(chi_restriction(e, c, Side::One),
                                 chi_restriction(e, c, Side::Two)),
                     e.glue_rank);
}

Rat polarized_slope(const DepthOneNumerics& e, const CurveData& c, const Polarization& w) {
  std::int64_t chi = chi_total(e, c);
  Rat weight = w.w1() * Rat(e.r1) + w.w2() * Rat(e.r2);
  if (weight == Rat(0))
    throw InvariantError("polarized slope undefined: w1 r1 + w2 r2 = 0");
  return Rat(chi) / weight;
}

namespace {

// {w in (0,1) : a w <= rhs}
RatInterval solve_le(const Rat& a, const Rat& rhs) {
  if (a.sign() == 0)
    return rhs.sign() >= 0 ? RatInterval::unit_open() : RatInterval::empty_set();
  Rat bound = rhs / a;
  return a.sign() > 0 ? unit_at_most(bound) : unit_at_least(bound);
}

// {w in (0,1) : a w >= rhs}
RatInterval solve_ge(const Rat& a, const Rat& rhs) { return solve_le(-a, -rhs); }

} // namespace

RatInterval teixidor_window(const DepthOneNumerics& e, const CurveData& c) {
  if (!e.is_vector_bundle())
    throw InvariantError("Teixidor window needs vector-bundle numerics (r1 = r2 = glue_rank >= 1)");
  const Rat chi(chi_total(e, c));
  const Rat r(e.r1);

  RatInterval window = RatInterval::unit_open();
  for (Side s : {Side::One, Side::Two}) {
    const Rat chi_i(chi_restriction(e, c, s));
    // w_s chi written as slope * w1 + offset.
    const Rat slope = s == Side::One ? chi : -chi;
    const Rat offset = s == Side::One ? Rat(0) : chi;
    window = interval_intersect(window, solve_le(slope, chi_i - offset));
    window = interval_intersect(window, solve_ge(slope, chi_i - r - offset));
  }
  return window;
}

} // namespace nodalk

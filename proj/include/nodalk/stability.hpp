#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nodalk/certificate.hpp"
#include "nodalk/curve.hpp"
#include "nodalk/facts.hpp"
#include "nodalk/pair.hpp"

namespace nodalk {

enum class VerdictKind { StronglyUnstable, WSemistable, WStable, RestrictionUnstable, Inconclusive };

std::string to_string(VerdictKind kind);
VerdictKind verdict_kind_from_string(const std::string& text);

/// Rule identifiers used in certificates, verdicts and CSV output.
namespace rules {
inline constexpr const char* kInference = "inference";
inline constexpr const char* kStrongInstability = "strong_instability";
inline constexpr const char* kRestrictionInstability = "restriction_instability";
inline constexpr const char* kStarWindow = "star_window";
inline constexpr const char* kLinearSeries = "general_linear_series";
inline constexpr const char* kCompleteRestrictions = "complete_restrictions";
inline constexpr const char* kNone = "none";
} // namespace rules

/*
 * Classifier output.
 *
 * WSemistable / WStable carry a nonempty window inside (0,1); the window is
 * the closed set of w1 satisfying the defining inequalities, and any w1 in
 * its open interior is a safe choice.  StronglyUnstable carries the two
 * per-component bounds on w_i, which sum to less than 1.
 */
struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string rule_id = rules::kNone;
  std::optional<RatInterval> window;
  std::optional<std::array<Rat, 2>> instability_bounds;
  std::array<bool, 2> restriction_unstable{false, false};
  Certificate certificate;
  std::vector<std::string> inferred_facts;
  std::vector<std::string> missing;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// The catalogued destabilizer S_j ⊗ O_{C_i}(-p) of M_{E,V}, living on component i.
struct DestabilizerNumerics {
  Side component = Side::One;
  std::int64_t s = 1;

  /// r_i = s, r_j = 0, d_i = -s, glue_rank = 0; chi = -s g_i.
  DepthOneNumerics depth_one() const;
  Rat slope(const CurveData& c, const Polarization& w) const;
};

/// Forward-chains the rule set to a fixed point.  Throws ContradictionError.
HypothesisSet infer_facts(const HypothesisSet& h, const PairNumerics& p, const CurveData& c);

/// g_i(k - r) / (d1 + d2 + (k - r)(p_a - 1)).
Rat instability_bound(const PairNumerics& p, const CurveData& c, Side i);

Verdict strong_instability(const PairNumerics& p, const CurveData& c, const HypothesisSet& h);

/*
 * [a1, b1] with
 *   a1 = ((k-r)(g1-1) + d1) / D,   b1 = ((k-r) g1 + d1) / D,
 *   D  = (k-r)(p_a - 1) + d1 + d2.
 * Always satisfies 0 < a1 < b1 < 1 for valid pair numerics.
 */
RatInterval polarization_window(const PairNumerics& p, const CurveData& c);

Verdict classify(const PairNumerics& p, const CurveData& c, const HypothesisSet& h);

struct H0Data {
  std::int64_t h0_total = 0;
  std::array<std::int64_t, 2> h0_twist{0, 0}; // h^0(E_j(-p))

  /// From h^0 of globally generated restrictions.
  static H0Data from_restrictions(std::int64_t h0_1, std::int64_t h0_2, int r);
};

/// k + h^0(E_j(-p)) <= h^0(E) for j = 1, 2.
bool generic_star_feasible(const PairNumerics& p, const H0Data& h0);

} // namespace nodalk

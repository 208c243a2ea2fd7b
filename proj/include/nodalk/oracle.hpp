#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nodalk/curve.hpp"
#include "nodalk/facts.hpp"
#include "nodalk/pair.hpp"
#include "nodalk/stability.hpp"

namespace nodalk {

/// Polarizations w1 = t/N for t = 1..N-1.
struct GridSpec {
  std::int64_t denominator = 1000;

  GridSpec() = default;
  explicit GridSpec(std::int64_t n);

  Rat point(std::int64_t t) const { return Rat(t, denominator); }
};

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1; // inclusive; lo > hi is the empty range

  bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/*
 * Inclusive ranges for a parameter sweep.  When d_cap_per_genus is set,
 * d_i additionally runs only up to cap * g_i.  When k_above_r is set, k is
 * taken as r + k instead of k itself.
 */
struct SweepRange {
  IntRange g1{2, 4};
  IntRange g2{2, 4};
  IntRange r{1, 2};
  IntRange d1{1, 12};
  IntRange d2{1, 12};
  IntRange k{1, 6};
  bool k_above_r = true;
  std::optional<std::int64_t> d_cap_per_genus;

  /// Throws InvariantError when a nonempty range leaves g >= 2, r >= 1, d >= 0 or k >= r+1.
  void validate() const;
};

/// Grid points (as numerators t) where both Teixidor inequalities hold, evaluated directly.
std::vector<std::int64_t> scan_teixidor(const DepthOneNumerics& e, const CurveData& c, const GridSpec& grid);

struct DestabilizerPoint {
  std::int64_t t = 0;
  std::array<bool, 2> violated{false, false}; // destabilizer on C_i has larger slope than M
  bool feasible() const { return !violated[0] && !violated[1]; }
};

struct DestabilizerScan {
  std::vector<DestabilizerPoint> points;
  std::vector<std::int64_t> feasible() const;
};

/// Compares mu_w of each catalogued destabilizer with mu_w(M_{E,V}) at every grid point.
DestabilizerScan scan_destabilizers(const PairNumerics& p, const CurveData& c, const GridSpec& grid);

/// Closed-form feasible region {w1 : w_i <= instability_bound_i whenever s_j >= 1}.
RatInterval destabilizer_region(const PairNumerics& p, const CurveData& c);

struct ClaimCounterexample {
  int g1, g2, r;
  std::int64_t d1, d2, k;
};

struct ClaimSweepReport {
  std::int64_t tuples = 0;         // (g1,g2,r,d1,d2) combinations examined
  std::int64_t skipped = 0;        // outside the claim's hypotheses
  std::int64_t k_checks = 0;       // individual k values checked
  std::array<std::int64_t, 3> case_tally{0, 0, 0};
  std::vector<ClaimCounterexample> counterexamples;
};

/// For every tuple and every r+1 <= k <= h^0 bound, checks k < d1 + d2 + r.
ClaimSweepReport sweep_claim(const SweepRange& range);

/// Default range for the claim sweep: r in [1,4], g_i in [2,8], d_i in [1, 4 g_i].
SweepRange default_claim_range();

enum class FactTemplate { Bare, Complete, GeneralSubspace, Star, LinearSeries };

std::string to_string(FactTemplate t);
std::optional<FactTemplate> fact_template_from_string(const std::string& name);

struct SweepTally {
  std::int64_t rows = 0;
  std::array<std::int64_t, 5> by_kind{0, 0, 0, 0, 0}; // indexed by VerdictKind
  std::int64_t contradictions = 0;
};

inline constexpr const char* kSweepCsvHeader = "g1,g2,r,d1,d2,k,s1,s2,verdict,window_lo,window_hi,rule_id";

/*
 * Classifies every tuple in lexicographic (g1,g2,r,d1,d2,k) order and writes
 * one CSV row each.  The Complete template ignores the k range: k is pinned
 * to h^0(E), so only tuples with both slopes above 2g_i - 2 are emitted.
 */
SweepTally sweep_classify(const SweepRange& range, FactTemplate tmpl, std::ostream& csv);

HypothesisSet template_facts(FactTemplate tmpl);

} // namespace nodalk

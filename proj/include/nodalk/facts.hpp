#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nodalk/certificate.hpp"
#include "nodalk/curve.hpp"

namespace nodalk {

/// Named hypotheses a scenario may assert.  Names match fact_name() exactly.
enum class Fact : int {
  E1_semistable,
  E2_semistable,
  E1_stable,
  E2_stable,
  E_globally_generated,
  E1_nontrivial,
  E2_nontrivial,
  star_condition,
  M1_semistable,
  M2_semistable,
  M1_stable,
  M2_stable,
  curve_general,
  pair_general_in_grassmannian,
  pair_general_in_Gkd_1,
  pair_general_in_Gkd_2,
  component_1_petri_general,
  component_2_petri_general,
  pair_is_complete,
};

inline constexpr std::size_t kFactCount = static_cast<std::size_t>(Fact::pair_is_complete) + 1;

std::string_view fact_name(Fact f);
std::optional<Fact> fact_from_name(std::string_view name);
const std::vector<Fact>& all_facts();
/// Closest valid fact name by edit distance.
std::string_view nearest_fact_name(std::string_view name);

Fact e_semistable(Side s);
Fact e_stable(Side s);
Fact e_nontrivial(Side s);
Fact m_semistable(Side s);
Fact m_stable(Side s);
Fact gkd_general(Side s);
Fact petri_general(Side s);

/*
 * Asserted facts plus everything inference has derived from them.
 *
 * Besides boolean facts this carries numeric knowledge about
 *   s_j = dim(V ∩ H^0(E_j(-p)))     (exact value and/or lower bound)
 *   h^0(E_i(-p))                     (lower bound)
 * with the source of each piece, so contradictions can name both sides.
 * Knowledge only ever grows.
 */
class HypothesisSet {
public:
  HypothesisSet() = default;
  HypothesisSet(std::initializer_list<Fact> facts);

  bool has(Fact f) const { return facts_.test(static_cast<std::size_t>(f)); }
  bool asserted(Fact f) const { return asserted_.test(static_cast<std::size_t>(f)); }
  /// Assert a fact as input.
  void assert_fact(Fact f);
  /// Record a derived fact; returns false when it was already known.
  bool derive(Fact f, CertificateEntry why);

  std::vector<Fact> facts() const;
  std::vector<Fact> inferred() const;

  std::int64_t s_lower(Side j) const { return s_lower_[index(j)]; }
  const std::optional<std::int64_t>& s_exact(Side j) const { return s_exact_[index(j)]; }
  std::int64_t twist_h0_lower(Side i) const { return twist_lower_[index(i)]; }
  bool kernel_restricts_to_components() const { return kernel_restricts_; }
  bool star_refuted() const { return s_lower_[0] >= 1 || s_lower_[1] >= 1; }

  /// Raise the lower bound on s_j; throws ContradictionError against a smaller exact value.
  bool raise_s_lower(Side j, std::int64_t bound, const CertificateEntry& why);
  /// Pin s_j exactly; throws ContradictionError against a conflicting bound or value.
  bool set_s_exact(Side j, std::int64_t value, const CertificateEntry& why);
  bool raise_twist_h0_lower(Side i, std::int64_t bound, const CertificateEntry& why);
  bool mark_kernel_restricts(const CertificateEntry& why);

  const Certificate& derivations() const { return log_; }

  /// Facts and numeric knowledge of this set are contained in other's.
  bool subset_of(const HypothesisSet& other) const;

  friend bool operator==(const HypothesisSet&, const HypothesisSet&) = default;

private:
  std::bitset<kFactCount> facts_;
  std::bitset<kFactCount> asserted_;
  std::array<std::int64_t, 2> s_lower_{0, 0};
  std::array<std::string, 2> s_lower_source_;
  std::array<std::optional<std::int64_t>, 2> s_exact_;
  std::array<std::string, 2> s_exact_source_;
  std::array<std::int64_t, 2> twist_lower_{0, 0};
  bool kernel_restricts_ = false;
  Certificate log_;
};

} // namespace nodalk

#include "nodalk/facts.hpp"

#include <algorithm>
#include <stdexcept>

#include "nodalk/errors.hpp"

namespace nodalk {

namespace {

constexpr std::array<std::string_view, kFactCount> kNames = {
    "E1_semistable",
    "E2_semistable",
    "E1_stable",
    "E2_stable",
    "E_globally_generated",
    "E1_nontrivial",
    "E2_nontrivial",
    "star_condition",
    "M1_semistable",
    "M2_semistable",
    "M1_stable",
    "M2_stable",
    "curve_general",
    "pair_general_in_grassmannian",
    "pair_general_in_Gkd_1",
    "pair_general_in_Gkd_2",
    "component_1_petri_general",
    "component_2_petri_general",
    "pair_is_complete",
};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j)
    row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

Fact pick(Side s, Fact one, Fact two) { return s == Side::One ? one : two; }

} // namespace

std::string_view fact_name(Fact f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Fact> fact_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFactCount; ++i)
    if (kNames[i] == name)
      return static_cast<Fact>(i);
  return std::nullopt;
}

const std::vector<Fact>& all_facts() {
  static const std::vector<Fact> facts = [] {
    std::vector<Fact> out;
    for (std::size_t i = 0; i < kFactCount; ++i)
      out.push_back(static_cast<Fact>(i));
    return out;
  }();
  return facts;
}

std::string_view nearest_fact_name(std::string_view name) {
  // A name containing the input as a prefix wins over edit distance.
  if (!name.empty())
    for (auto candidate : kNames)
      if (candidate.substr(0, name.size()) == name)
        return candidate;
  return *std::min_element(kNames.begin(), kNames.end(), [&](auto a, auto b) {
    return edit_distance(name, a) < edit_distance(name, b);
  });
}

Fact e_semistable(Side s) { return pick(s, Fact::E1_semistable, Fact::E2_semistable); }
Fact e_stable(Side s) { return pick(s, Fact::E1_stable, Fact::E2_stable); }
Fact e_nontrivial(Side s) { return pick(s, Fact::E1_nontrivial, Fact::E2_nontrivial); }
Fact m_semistable(Side s) { return pick(s, Fact::M1_semistable, Fact::M2_semistable); }
Fact m_stable(Side s) { return pick(s, Fact::M1_stable, Fact::M2_stable); }
Fact gkd_general(Side s) { return pick(s, Fact::pair_general_in_Gkd_1, Fact::pair_general_in_Gkd_2); }
Fact petri_general(Side s) {
  return pick(s, Fact::component_1_petri_general, Fact::component_2_petri_general);
}

// ---- hypothesis set -------------------------------------------------------

HypothesisSet::HypothesisSet(std::initializer_list<Fact> facts) {
  for (Fact f : facts)
    assert_fact(f);
}

void HypothesisSet::assert_fact(Fact f) {
  facts_.set(static_cast<std::size_t>(f));
  asserted_.set(static_cast<std::size_t>(f));
}

bool HypothesisSet::derive(Fact f, CertificateEntry why) {
  if (has(f))
    return false;
  facts_.set(static_cast<std::size_t>(f));
  log_.push_back(std::move(why));
  return true;
}

std::vector<Fact> HypothesisSet::facts() const {
  std::vector<Fact> out;
  for (Fact f : all_facts())
    if (has(f))
      out.push_back(f);
  return out;
}

std::vector<Fact> HypothesisSet::inferred() const {
  std::vector<Fact> out;
  for (Fact f : all_facts())
    if (has(f) && !asserted(f))
      out.push_back(f);
  return out;
}

bool HypothesisSet::raise_s_lower(Side j, std::int64_t bound, const CertificateEntry& why) {
  const int idx = index(j);
  if (bound <= s_lower_[idx])
    return false;
  if (s_exact_[idx] && *s_exact_[idx] < bound)
    throw ContradictionError("s_" + std::to_string(idx + 1) + " is pinned below a derived lower bound",
                             s_exact_source_[idx] + ": s_" + std::to_string(idx + 1) + " = " +
                                 std::to_string(*s_exact_[idx]),
                             why.rule_id + ": s_" + std::to_string(idx + 1) +
                                 " >= " + std::to_string(bound) + " (" + why.statement + ")");
  s_lower_[idx] = bound;
  s_lower_source_[idx] = why.rule_id;
  log_.push_back(why);
  return true;
}

bool HypothesisSet::set_s_exact(Side j, std::int64_t value, const CertificateEntry& why) {
  const int idx = index(j);
  const std::string name = "s_" + std::to_string(idx + 1);
  if (s_exact_[idx]) {
    if (*s_exact_[idx] == value)
      return false;
    throw ContradictionError(name + " has two different values",
                             s_exact_source_[idx] + ": " + name + " = " +
                                 std::to_string(*s_exact_[idx]),
                             why.rule_id + ": " + name + " = " + std::to_string(value));
  }
  if (value < s_lower_[idx])
    throw ContradictionError(name + " is pinned below a derived lower bound",
                             why.rule_id + ": " + name + " = " + std::to_string(value),
                             s_lower_source_[idx] + ": " + name + " >= " +
                                 std::to_string(s_lower_[idx]));
  s_exact_[idx] = value;
  s_exact_source_[idx] = why.rule_id;
  log_.push_back(why);
  if (value > s_lower_[idx]) {
    s_lower_[idx] = value;
    s_lower_source_[idx] = why.rule_id;
  }
  return true;
}

bool HypothesisSet::raise_twist_h0_lower(Side i, std::int64_t bound, const CertificateEntry& why) {
  const int idx = index(i);
  if (bound <= twist_lower_[idx])
    return false;
  twist_lower_[idx] = bound;
  log_.push_back(why);
  return true;
}

bool HypothesisSet::mark_kernel_restricts(const CertificateEntry& why) {
  if (kernel_restricts_)
    return false;
  kernel_restricts_ = true;
  log_.push_back(why);
  return true;
}

bool HypothesisSet::subset_of(const HypothesisSet& other) const {
  if ((facts_ & ~other.facts_).any())
    return false;
  for (int i = 0; i < 2; ++i) {
    if (s_lower_[i] > other.s_lower_[i] || twist_lower_[i] > other.twist_lower_[i])
      return false;
    if (s_exact_[i] && s_exact_[i] != other.s_exact_[i])
      return false;
  }
  return !kernel_restricts_ || other.kernel_restricts_;
}

} // namespace nodalk

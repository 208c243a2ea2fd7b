#include "nodalk/oracle.hpp"

#include <ostream>

#include "nodalk/errors.hpp"

namespace nodalk {

GridSpec::GridSpec(std::int64_t n) : denominator(n) {
  if (n < 2)
    throw InvariantError("grid denominator must be at least 2");
}

void SweepRange::validate() const {
  auto check = [](const IntRange& range, std::int64_t min, const char* what) {
    if (!range.empty() && range.lo < min)
      throw InvariantError(std::string("sweep range for ") + what + " must start at >= " + std::to_string(min));
  };
  check(g1, 2, "g1");
  check(g2, 2, "g2");
  check(r, 1, "r");
  check(d1, 0, "d1");
  check(d2, 0, "d2");
  if (k_above_r)
    check(k, 1, "k - r");
  if (d_cap_per_genus && *d_cap_per_genus < 0)
    throw InvariantError("degree cap per genus must be nonnegative");
}

std::vector<std::int64_t> scan_teixidor(const DepthOneNumerics& e, const CurveData& c, const GridSpec& grid) {
  if (!e.is_vector_bundle())
    throw InvariantError("Teixidor scan needs vector-bundle numerics");
  const Rat chi(chi_total(e, c));
  const Rat rank(e.r1);
  const Rat chi1(chi_restriction(e, c, Side::One));
  const Rat chi2(chi_restriction(e, c, Side::Two));

  std::vector<std::int64_t> out;
  for (std::int64_t t = 1; t < grid.denominator; ++t) {
    const Rat w1 = grid.point(t);
    const Rat w2 = Rat(1) - w1;
    const bool first = w1 * chi <= chi1 && chi1 <= w1 * chi + rank;
    const bool second = w2 * chi <= chi2 && chi2 <= w2 * chi + rank;
    if (first && second)
      out.push_back(t);
  }
  return out;
}

std::vector<std::int64_t> DestabilizerScan::feasible() const {
  std::vector<std::int64_t> out;
  for (const auto& pt : points)
    if (pt.feasible())
      out.push_back(pt.t);
  return out;
}

DestabilizerScan scan_destabilizers(const PairNumerics& p, const CurveData& c, const GridSpec& grid) {
  p.validate();
  if (!p.s1 || !p.s2)
    throw InvariantError("destabilizer scan needs s1 and s2");
  const DepthOneNumerics kernel = kernel_depth_one(p);

  // The destabilizer on C_i is built from S_j, j != i.
  std::vector<DestabilizerNumerics> catalog;
  for (Side i : {Side::One, Side::Two})
    if (auto sj = p.s(other(i)); *sj >= 1)
      catalog.push_back({i, *sj});

  DestabilizerScan scan;
  scan.points.reserve(static_cast<std::size_t>(grid.denominator - 1));
  for (std::int64_t t = 1; t < grid.denominator; ++t) {
    const Polarization w(grid.point(t));
    const Rat mu_kernel = polarized_slope(kernel, c, w);
    DestabilizerPoint pt;
    pt.t = t;
    for (const auto& d : catalog)
      pt.violated[index(d.component)] = d.slope(c, w) > mu_kernel;
    scan.points.push_back(pt);
  }
  return scan;
}

RatInterval destabilizer_region(const PairNumerics& p, const CurveData& c) {
  RatInterval region = RatInterval::unit_open();
  if (p.s2.value_or(0) >= 1)
    region = interval_intersect(region, unit_at_most(instability_bound(p, c, Side::One)));
  if (p.s1.value_or(0) >= 1)
    region = interval_intersect(region, unit_at_least(Rat(1) - instability_bound(p, c, Side::Two)));
  return region;
}

SweepRange default_claim_range() {
  SweepRange range;
  range.g1 = {2, 8};
  range.g2 = {2, 8};
  range.r = {1, 4};
  range.d1 = {1, 32};
  range.d2 = {1, 32};
  range.d_cap_per_genus = 4;
  return range;
}

namespace {

std::int64_t d_upper(const SweepRange& range, const IntRange& d, int g) {
  if (range.d_cap_per_genus)
    return std::min(d.hi, *range.d_cap_per_genus * g);
  return d.hi;
}

// Calls f(g1, g2, r, d1, d2) in lexicographic order.
template <typename F>
void for_each_base(const SweepRange& range, F&& f) {
  for (std::int64_t g1 = range.g1.lo; g1 <= range.g1.hi; ++g1)
    for (std::int64_t g2 = range.g2.lo; g2 <= range.g2.hi; ++g2)
      for (std::int64_t r = range.r.lo; r <= range.r.hi; ++r)
        for (std::int64_t d1 = range.d1.lo; d1 <= d_upper(range, range.d1, static_cast<int>(g1)); ++d1)
          for (std::int64_t d2 = range.d2.lo; d2 <= d_upper(range, range.d2, static_cast<int>(g2)); ++d2)
            f(static_cast<int>(g1), static_cast<int>(g2), static_cast<int>(r), d1, d2);
}

} // namespace

ClaimSweepReport sweep_claim(const SweepRange& range) {
  range.validate();
  ClaimSweepReport report;
  for_each_base(range, [&](int g1, int g2, int r, std::int64_t d1, std::int64_t d2) {
    ++report.tuples;
    const CurveData c(g1, g2);
    PairNumerics p{r, d1, d2, r + 1, std::nullopt, std::nullopt};
    ClaimResult claim;
    try {
      claim = claim_check(p, c);
    } catch (const HypothesisError&) {
      ++report.skipped;
      return;
    }
    ++report.case_tally[static_cast<int>(claim.which) - 1];
    const std::int64_t target = d1 + d2 + r;
    for (std::int64_t k = r + 1; k <= claim.h0_bound; ++k) {
      ++report.k_checks;
      if (!(k < target))
        report.counterexamples.push_back({g1, g2, r, d1, d2, k});
    }
  });
  return report;
}

std::string to_string(FactTemplate t) {
  switch (t) {
  case FactTemplate::Bare:
    return "bare";
  case FactTemplate::Complete:
    return "complete";
  case FactTemplate::GeneralSubspace:
    return "general-subspace";
  case FactTemplate::Star:
    return "star";
  case FactTemplate::LinearSeries:
    return "linear-series";
  }
  return "?";
}

std::optional<FactTemplate> fact_template_from_string(const std::string& name) {
  for (auto t : {FactTemplate::Bare, FactTemplate::Complete, FactTemplate::GeneralSubspace, FactTemplate::Star,
                 FactTemplate::LinearSeries})
    if (to_string(t) == name)
      return t;
  return std::nullopt;
}

HypothesisSet template_facts(FactTemplate tmpl) {
  switch (tmpl) {
  case FactTemplate::Bare:
    return {};
  case FactTemplate::Complete:
    return {Fact::pair_is_complete, Fact::E1_semistable, Fact::E2_semistable, Fact::E1_nontrivial,
            Fact::E2_nontrivial};
  case FactTemplate::GeneralSubspace:
    return {Fact::E1_semistable, Fact::E2_semistable, Fact::pair_general_in_grassmannian};
  case FactTemplate::Star:
    return {Fact::star_condition, Fact::M1_semistable, Fact::M2_semistable};
  case FactTemplate::LinearSeries:
    return {Fact::curve_general, Fact::pair_general_in_Gkd_1, Fact::pair_general_in_Gkd_2};
  }
  return {};
}

namespace {

std::string opt_str(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string(); }

void write_row(std::ostream& csv, const CurveData& c, const PairNumerics& p, const HypothesisSet& facts,
               SweepTally& tally) {
  csv << c.g1() << ',' << c.g2() << ',' << p.r << ',' << p.d1 << ',' << p.d2 << ',' << p.k << ',';
  ++tally.rows;
  try {
    const HypothesisSet inferred = infer_facts(facts, p, c);
    const Verdict v = classify(p, c, facts);
    csv << opt_str(inferred.s_exact(Side::One)) << ',' << opt_str(inferred.s_exact(Side::Two)) << ','
        << to_string(v.kind) << ',';
    if (v.window)
      csv << v.window->lo() << ',' << v.window->hi();
    else
      csv << ',';
    csv << ',' << v.rule_id << '\n';
    ++tally.by_kind[static_cast<int>(v.kind)];
  } catch (const ContradictionError&) {
    csv << ",,Contradiction,,,inconsistent\n";
    ++tally.contradictions;
  }
}

} // namespace

SweepTally sweep_classify(const SweepRange& range, FactTemplate tmpl, std::ostream& csv) {
  range.validate();
  SweepTally tally;
  const HypothesisSet facts = template_facts(tmpl);
  csv << kSweepCsvHeader << '\n';
  for_each_base(range, [&](int g1, int g2, int r, std::int64_t d1, std::int64_t d2) {
    const CurveData c(g1, g2);
    if (tmpl == FactTemplate::Complete) {
      if (!slope_above_canonical(g1, r, d1) || !slope_above_canonical(g2, r, d2))
        return;
      const std::int64_t k =
          h0_total(h0_semistable_bound(g1, r, d1), h0_semistable_bound(g2, r, d2), r);
      if (k < r + 1)
        return;
      write_row(csv, c, PairNumerics{r, d1, d2, k, std::nullopt, std::nullopt}, facts, tally);
      return;
    }
    const std::int64_t shift = range.k_above_r ? r : 0;
    for (std::int64_t k = range.k.lo + shift; k <= range.k.hi + shift; ++k) {
      if (k < r + 1)
        continue;
      write_row(csv, c, PairNumerics{r, d1, d2, k, std::nullopt, std::nullopt}, facts, tally);
    }
  });
  return tally;
}

} // namespace nodalk

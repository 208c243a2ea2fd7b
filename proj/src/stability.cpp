#include "nodalk/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "nodalk/errors.hpp"

namespace nodalk {

namespace cite {
constexpr const char* kGenerated = "generated pair: V generates E, hence E and each E_i are globally generated";
constexpr const char* kStableImpliesSemistable = "stable implies semistable";
constexpr const char* kTwistSection =
    "semistable nontrivial globally generated E_i has h^0(E_i) >= r+1, so h^0(E_i(-p)) >= 1";
constexpr const char* kRestrictionNotInjective =
    "dim V > h^0(E_i): restriction V -> H^0(E_i) is not injective, so V ∩ H^0(E_j(-p)) != 0";
constexpr const char* kCompletePair = "complete pair: V = H^0(E) contains H^0(E_j(-p)), so s_j = h^0(E_j(-p))";
constexpr const char* kTwistDown = "globally generated E_j: h^0(E_j(-p)) = h^0(E_j) - r";
constexpr const char* kSectionCount = "globally generated restrictions: h^0(E) = h^0(E_1) + h^0(E_2) - r";
constexpr const char* kSectionDegree =
    "a nonzero section of E_i(-p) gives O(Z) ⊂ E_i with deg Z >= 1; semistability forces d_i >= r";
constexpr const char* kStarKernel =
    "V ∩ H^0(E_j(-p)) = 0 for j = 1,2 iff M_{E,V} restricted to C_i is M_{E_i,V_i}";
constexpr const char* kStarFromS = "s_1 = s_2 = 0 is exactly the star condition";
constexpr const char* kLinearSeriesDim = "(L_i,V_i) in G^{k-1}_{d_i}(C_i) has dim V_i = k, so V ∩ H^0(L_j(-p)) = 0";
constexpr const char* kBrillNoether = "general curve: G^{k-1}_d nonempty iff rho = g - k(g-d+k-1) >= 0";
constexpr const char* kDestabilizer =
    "S_j ⊗ O_{C_i}(-p) ⊂ M_{E,V} has mu_w = -g_i/w_i; w-semistability would force w_i <= g_i(k-r)/(d_1+d_2+(k-r)(p_a-1))";
constexpr const char* kClaim = "k <= h^0(E) bounded by Riemann–Roch / Xiao–Clifford on each component gives k < d_1+d_2+r";
constexpr const char* kWeightsSum = "w_1 + w_2 = 1 cannot be bounded by a sum below 1: M_{E,V} is w-unstable for every w";
constexpr const char* kRestrictionUnstable = "S_j ⊗ O_{C_i} ⊂ M_{E,V}|C_i has slope 0 > -d_i/(k-r)";
constexpr const char* kTeixidor =
    "Teixidor criterion: w_i chi(M) <= chi(M_i) <= w_i chi(M) + rank(M) with semistable restrictions gives w-semistability";
constexpr const char* kTeixidorStable = "Teixidor criterion: one stable restriction upgrades to w-stability";
constexpr const char* kWindowBounds = "window endpoints satisfy 0 < a_1 < b_1 < 1";
constexpr const char* kLinearSeriesKernel =
    "kernel of a general linear series on a general curve is semistable";
constexpr const char* kPetriKernel =
    "Petri-general component with k >= 6 and g_i >= 2k-6 has stable kernel M_{L_i,V_i}";
constexpr const char* kRiemannRoch = "semistable of slope > 2g_i-2: h^1(E_i) = 0 and h^0(E_i) = d_i + r(1-g_i)";
constexpr const char* kGenericStar = "Schubert cycle count: k + h^0(E_j(-p)) <= h^0(E) lets a general V avoid H^0(E_j(-p))";
constexpr const char* kButler = "Butler: M_{E_i} semistable for semistable E_i with d_i >= 2rg_i, stable when d_i > 2rg_i";
constexpr const char* kXiaoClifford = "Xiao–Clifford: h^0 <= deg/2 + r for semistable bundles with 0 <= mu <= 2g-2";
} // namespace cite

std::string to_string(VerdictKind kind) {
  switch (kind) {
  case VerdictKind::StronglyUnstable:
    return "StronglyUnstable";
  case VerdictKind::WSemistable:
    return "WSemistable";
  case VerdictKind::WStable:
    return "WStable";
  case VerdictKind::RestrictionUnstable:
    return "RestrictionUnstable";
  case VerdictKind::Inconclusive:
    return "Inconclusive";
  }
  return "?";
}

VerdictKind verdict_kind_from_string(const std::string& text) {
  for (VerdictKind k : {VerdictKind::StronglyUnstable, VerdictKind::WSemistable, VerdictKind::WStable,
                        VerdictKind::RestrictionUnstable, VerdictKind::Inconclusive})
    if (to_string(k) == text)
      return k;
  throw std::invalid_argument("unknown verdict kind '" + text + "'");
}

DepthOneNumerics DestabilizerNumerics::depth_one() const {
  if (s < 1)
    throw InvariantError("destabilizer needs s >= 1");
  DepthOneNumerics e;
  if (component == Side::One) {
    e.r1 = static_cast<int>(s);
    e.d1 = -s;
  } else {
    e.r2 = static_cast<int>(s);
    e.d2 = -s;
  }
  return e;
}

Rat DestabilizerNumerics::slope(const CurveData& c, const Polarization& w) const {
  return polarized_slope(depth_one(), c, w);
}

namespace {

std::string sub(const char* name, Side s) { return std::string(name) + "_" + std::to_string(index(s) + 1); }

CertificateEntry infer_entry(std::string statement, const char* citation,
                             std::optional<Inequality> ineq = std::nullopt) {
  return {rules::kInference, citation, std::move(statement), std::move(ineq)};
}

std::int64_t h0_bound(const PairNumerics& p, const CurveData& c, Side i) {
  return h0_semistable_bound(c.genus(i), p.r, p.degree(i));
}

} // namespace

HypothesisSet infer_facts(const HypothesisSet& h, const PairNumerics& p, const CurveData& c) {
  p.validate();
  HypothesisSet out = h;
  const Side sides[] = {Side::One, Side::Two};

  for (Side j : sides)
    if (auto s = p.s(j))
      out.set_s_exact(j, *s, {"input", "scenario numerics", sub("s", j) + " = " + std::to_string(*s), std::nullopt});

  bool changed = true;
  while (changed) {
    changed = false;

    changed |= out.derive(Fact::E_globally_generated, infer_entry("E is globally generated", cite::kGenerated));

    for (Side i : sides) {
      if (out.has(e_stable(i)))
        changed |= out.derive(e_semistable(i), infer_entry(sub("E", i) + " semistable", cite::kStableImpliesSemistable));
      if (out.has(m_stable(i)))
        changed |= out.derive(m_semistable(i), infer_entry(sub("M", i) + " semistable", cite::kStableImpliesSemistable));
    }

    for (Side i : sides) {
      if (!out.has(gkd_general(i)))
        continue;
      if (out.has(Fact::curve_general) && brill_noether_rho(c.genus(i), p.degree(i), p.k) < 0)
        throw ContradictionError("linear series asserted on a general curve where none exist",
                                 std::string(fact_name(gkd_general(i))),
                                 "rho_" + std::to_string(index(i) + 1) + " = " +
                                     std::to_string(brill_noether_rho(c.genus(i), p.degree(i), p.k)) + " < 0");
      changed |= out.set_s_exact(other(i), 0,
                                 {std::string(fact_name(gkd_general(i))), cite::kLinearSeriesDim,
                                  sub("s", other(i)) + " = 0", std::nullopt});
    }

    if (out.has(Fact::star_condition)) {
      for (Side j : sides)
        changed |= out.set_s_exact(j, 0, {"star_condition", cite::kStarKernel, sub("s", j) + " = 0", std::nullopt});
      changed |= out.mark_kernel_restricts(
          infer_entry("M_{E,V}|C_i ≅ M_{E_i,V_i} and k_i = k for i = 1,2", cite::kStarKernel));
    } else if (out.s_exact(Side::One) == 0 && out.s_exact(Side::Two) == 0) {
      changed |= out.derive(Fact::star_condition, infer_entry("star condition holds", cite::kStarFromS));
    }

    for (Side i : sides) {
      const Side j = other(i);

      // (a) h^0(E_i(-p)) >= 1
      if (out.has(Fact::E_globally_generated) && out.has(e_semistable(i)) && out.has(e_nontrivial(i)))
        changed |= out.raise_twist_h0_lower(
            i, 1, infer_entry("h0(E_" + std::to_string(index(i) + 1) + "(-p)) >= 1", cite::kTwistSection));

      // (b) k > h^0(E_i) forces s_j >= 1
      if (out.has(e_semistable(i))) {
        const std::int64_t bound = h0_bound(p, c, i);
        if (p.k > bound) {
          CertificateEntry why = infer_entry(sub("s", j) + " >= 1 since k > h0(E_" + std::to_string(index(i) + 1) + ")",
                                             cite::kRestrictionNotInjective, Inequality{Rat(p.k), Rel::Greater, Rat(bound)});
          if (out.has(Fact::star_condition) && out.asserted(Fact::star_condition))
            throw ContradictionError("star condition asserted but V cannot inject into H^0(E_i)",
                                     "star_condition: " + sub("s", j) + " = 0",
                                     "k = " + std::to_string(p.k) + " > h0 bound " + std::to_string(bound));
          changed |= out.raise_s_lower(j, 1, why);
        }
      }

      // (c) complete pair: s_j = h^0(E_j(-p))
      if (out.has(Fact::pair_is_complete)) {
        if (out.twist_h0_lower(j) >= 1)
          changed |= out.raise_s_lower(j, out.twist_h0_lower(j),
                                       infer_entry(sub("s", j) + " >= " + std::to_string(out.twist_h0_lower(j)),
                                                   cite::kCompletePair));
        if (out.has(e_semistable(j)) && slope_above_canonical(c.genus(j), p.r, p.degree(j))) {
          const std::int64_t h0j = h0_bound(p, c, j);
          const std::int64_t sj = h0_twist_down(h0j, p.r);
          changed |= out.set_s_exact(j, sj,
                                     {"pair_is_complete", cite::kTwistDown,
                                      sub("s", j) + " = h0(E_" + std::to_string(index(j) + 1) + ") - r = " +
                                          std::to_string(sj),
                                      std::nullopt});
        }
      }

      // (d) s_i >= 1 with E_i semistable needs d_i >= r
      if (out.s_lower(i) >= 1 && out.has(e_semistable(i)) && p.degree(i) < p.r)
        throw ContradictionError("section of E_i(-p) in V needs d_i >= r",
                                 sub("s", i) + " >= " + std::to_string(out.s_lower(i)),
                                 std::string(fact_name(e_semistable(i))) + " with " + sub("d", i) + " = " +
                                     std::to_string(p.degree(i)) + " < r = " + std::to_string(p.r));
    }

    if (out.has(Fact::E1_semistable) && out.has(Fact::E2_semistable)) {
      const std::int64_t b1 = h0_bound(p, c, Side::One);
      const std::int64_t b2 = h0_bound(p, c, Side::Two);
      const std::int64_t total = h0_total(b1, b2, p.r);
      if (p.k > total)
        throw ContradictionError("dim V exceeds every possible h^0(E)",
                                 "k = " + std::to_string(p.k),
                                 "h0(E) <= " + std::to_string(total) + " (semistable restrictions)");
      const bool exact = slope_above_canonical(c.g1(), p.r, p.d1) && slope_above_canonical(c.g2(), p.r, p.d2);
      if (out.has(Fact::pair_is_complete) && exact && p.k != total)
        throw ContradictionError("complete pair must have k = h^0(E)",
                                 "pair_is_complete: k = " + std::to_string(p.k),
                                 "Riemann–Roch: h0(E) = " + std::to_string(total));
    }
  }
  return out;
}

Rat instability_bound(const PairNumerics& p, const CurveData& c, Side i) {
  p.validate();
  const std::int64_t m = p.kernel_rank();
  const std::int64_t den =
      checked_add(checked_add(p.d1, p.d2), checked_mul(m, c.arithmetic_genus() - 1));
  if (den <= 0)
    throw InvariantError("instability bound denominator must be positive");
  return Rat(checked_mul(c.genus(i), m), den);
}

RatInterval polarization_window(const PairNumerics& p, const CurveData& c) {
  p.validate();
  const std::int64_t m = p.kernel_rank();
  const std::int64_t den =
      checked_add(checked_mul(m, c.arithmetic_genus() - 1), checked_add(p.d1, p.d2));
  const Rat a1(checked_add(checked_mul(m, c.g1() - 1), p.d1), den);
  const Rat b1(checked_add(checked_mul(m, c.g1()), p.d1), den);
  if (!(Rat(0) < a1 && a1 < b1 && b1 < Rat(1)))
    throw std::logic_error("window endpoints violate 0 < a1 < b1 < 1: " + a1.str() + ", " + b1.str());
  return interval_intersect(RatInterval::closed(a1, b1), RatInterval::unit_open());
}

H0Data H0Data::from_restrictions(std::int64_t h0_1, std::int64_t h0_2, int r) {
  H0Data out;
  out.h0_total = nodalk::h0_total(h0_1, h0_2, r);
  out.h0_twist = {h0_twist_down(h0_1, r), h0_twist_down(h0_2, r)};
  return out;
}

bool generic_star_feasible(const PairNumerics& p, const H0Data& h0) {
  return std::all_of(h0.h0_twist.begin(), h0.h0_twist.end(),
                     [&](std::int64_t twist) { return checked_add(p.k, twist) <= h0.h0_total; });
}

namespace {

std::vector<std::string> describe_inferred(const HypothesisSet& h) {
  std::vector<std::string> out;
  for (Fact f : h.inferred())
    out.emplace_back(fact_name(f));
  for (Side j : {Side::One, Side::Two}) {
    if (h.s_exact(j))
      out.push_back(sub("s", j) + " = " + std::to_string(*h.s_exact(j)));
    else if (h.s_lower(j) > 0)
      out.push_back(sub("s", j) + " >= " + std::to_string(h.s_lower(j)));
    if (h.twist_h0_lower(j) > 0)
      out.push_back("h0(E_" + std::to_string(index(j) + 1) + "(-p)) >= " + std::to_string(h.twist_h0_lower(j)));
  }
  return out;
}

void require_fact(const HypothesisSet& h, Fact f, std::vector<std::string>& missing) {
  if (!h.has(f))
    missing.emplace_back(fact_name(f));
}

void require(bool ok, std::string what, std::vector<std::string>& missing) {
  if (!ok)
    missing.push_back(std::move(what));
}

Verdict open_verdict(const char* rule, const HypothesisSet& h) {
  Verdict v;
  v.rule_id = rule;
  v.certificate = h.derivations();
  return v;
}

void finish(Verdict& v, const HypothesisSet& h) {
  v.inferred_facts = describe_inferred(h);
  if (!certificate_sound(v.certificate))
    throw std::logic_error("unsound certificate for rule " + v.rule_id);
}

// Records the window and its Teixidor endpoint identities.
void add_window(Verdict& v, const char* rule, const PairNumerics& p, const CurveData& c) {
  const RatInterval window = polarization_window(p, c);
  const KernelNumerics kn = kernel_numerics(p, c);
  const Rat a1 = window.lo(), b1 = window.hi();
  v.window = window;
  v.certificate.push_back({rule, cite::kWindowBounds, "a_1 > 0", Inequality{a1, Rel::Greater, Rat(0)}});
  v.certificate.push_back({rule, cite::kWindowBounds, "a_1 < b_1", Inequality{a1, Rel::Less, b1}});
  v.certificate.push_back({rule, cite::kWindowBounds, "b_1 < 1", Inequality{b1, Rel::Less, Rat(1)}});
  v.certificate.push_back({rule, cite::kTeixidor, "lower end: a_1 chi(M) = chi(M_1)",
                           Inequality{a1 * Rat(kn.chi), Rel::Equal, Rat(kn.chi_restriction_1)}});
  v.certificate.push_back({rule, cite::kTeixidor, "upper end: b_1 chi(M) + rank(M) = chi(M_1)",
                           Inequality{b1 * Rat(kn.chi) + Rat(kn.rank), Rel::Equal, Rat(kn.chi_restriction_1)}});
}

struct Attempt {
  const char* rule;
  std::vector<std::string> missing;
  std::optional<Verdict> fired;
};

Attempt try_star_window(const PairNumerics& p, const CurveData& c, HypothesisSet h) {
  Attempt a{rules::kStarWindow, {}, std::nullopt};
  require_fact(h, Fact::star_condition, a.missing);
  require_fact(h, Fact::M1_semistable, a.missing);
  require_fact(h, Fact::M2_semistable, a.missing);
  if (!a.missing.empty())
    return a;

  Verdict v = open_verdict(rules::kStarWindow, h);
  v.certificate.push_back({rules::kStarWindow, cite::kStarKernel, "restrictions of M_{E,V} are M_{E_1,V_1}, M_{E_2,V_2}", std::nullopt});
  v.certificate.push_back({rules::kStarWindow, cite::kTeixidor, "M_1 and M_2 semistable", std::nullopt});
  add_window(v, rules::kStarWindow, p, c);
  if (h.has(Fact::M1_stable) || h.has(Fact::M2_stable)) {
    v.kind = VerdictKind::WStable;
    v.certificate.push_back({rules::kStarWindow, cite::kTeixidorStable,
                             h.has(Fact::M1_stable) ? "M_1 stable" : "M_2 stable", std::nullopt});
  } else {
    v.kind = VerdictKind::WSemistable;
    v.missing.push_back("M1_stable or M2_stable");
  }
  finish(v, h);
  a.fired = std::move(v);
  return a;
}

bool petri_upgrade(const PairNumerics& p, const CurveData& c, const HypothesisSet& h, Side i) {
  return h.has(petri_general(i)) && p.k >= 6 && c.genus(i) >= 2 * p.k - 6;
}

Attempt try_linear_series(const PairNumerics& p, const CurveData& c, HypothesisSet h) {
  Attempt a{rules::kLinearSeries, {}, std::nullopt};
  require(p.r == 1, "r = 1", a.missing);
  require_fact(h, Fact::curve_general, a.missing);
  require_fact(h, Fact::pair_general_in_Gkd_1, a.missing);
  require_fact(h, Fact::pair_general_in_Gkd_2, a.missing);
  for (Side i : {Side::One, Side::Two})
    require(gkd_nonempty_general(c.genus(i), p.degree(i), p.k),
            sub("d", i) + " >= g_" + std::to_string(index(i) + 1) + " + k - 1 - g/k", a.missing);
  if (!a.missing.empty())
    return a;

  const char* rule = rules::kLinearSeries;
  if (!h.has(Fact::star_condition))
    throw std::logic_error("linear series facts did not yield the star condition");
  for (Side i : {Side::One, Side::Two})
    h.derive(m_semistable(i), {rule, cite::kLinearSeriesKernel, sub("M", i) + " semistable", std::nullopt});
  std::optional<Side> stable_side;
  for (Side i : {Side::One, Side::Two})
    if (!stable_side && petri_upgrade(p, c, h, i))
      stable_side = i;
  if (stable_side)
    h.derive(m_stable(*stable_side), {rule, cite::kPetriKernel, sub("M", *stable_side) + " stable", std::nullopt});

  Verdict v = open_verdict(rule, h);
  for (Side i : {Side::One, Side::Two}) {
    const int g = c.genus(i);
    const std::int64_t d = p.degree(i);
    v.certificate.push_back({rule, cite::kBrillNoether, "rho_" + std::to_string(index(i) + 1) + " >= 0",
                             Inequality{Rat(brill_noether_rho(g, d, p.k)), Rel::GreaterEq, Rat(0)}});
    v.certificate.push_back({rule, cite::kBrillNoether, sub("d", i) + " >= g + k - 1 - g/k",
                             Inequality{Rat(d), Rel::GreaterEq, Rat(g) + Rat(p.k - 1) - Rat(g, p.k)}});
  }
  add_window(v, rule, p, c);

  if (stable_side) {
    const Side i = *stable_side;
    v.certificate.push_back({rule, cite::kPetriKernel, "k >= 6", Inequality{Rat(p.k), Rel::GreaterEq, Rat(6)}});
    v.certificate.push_back({rule, cite::kPetriKernel, "g_" + std::to_string(index(i) + 1) + " >= 2k - 6",
                             Inequality{Rat(c.genus(i)), Rel::GreaterEq, Rat(2 * p.k - 6)}});
    v.certificate.push_back({rule, cite::kTeixidorStable, sub("M", i) + " stable", std::nullopt});
    v.kind = VerdictKind::WStable;
  } else {
    v.kind = VerdictKind::WSemistable;
    v.missing.push_back("component_i_petri_general with k >= 6 and g_i >= 2k-6");
  }
  finish(v, h);
  a.fired = std::move(v);
  return a;
}

Attempt try_complete_restrictions(const PairNumerics& p, const CurveData& c, HypothesisSet h) {
  Attempt a{rules::kCompleteRestrictions, {}, std::nullopt};
  const char* rule = rules::kCompleteRestrictions;
  require_fact(h, Fact::E1_semistable, a.missing);
  require_fact(h, Fact::E2_semistable, a.missing);
  require_fact(h, Fact::pair_general_in_grassmannian, a.missing);
  for (Side i : {Side::One, Side::Two})
    require(p.degree(i) >= 2LL * p.r * c.genus(i), sub("d", i) + " >= 2 r g_" + std::to_string(index(i) + 1), a.missing);
  require(p.d1 - p.d2 == static_cast<std::int64_t>(p.r) * (c.g1() - c.g2()), "d_1 - d_2 = r(g_1 - g_2)", a.missing);
  require(p.k == chi_component(p.d1, p.r, c.g1()), "k = d_1 + r(1 - g_1)", a.missing);
  if (!a.missing.empty())
    return a;

  // Restrictions are globally generated with h^1 = 0 and h^0(E_i) = k.
  const H0Data h0 = H0Data::from_restrictions(p.k, p.k, p.r);
  if (!generic_star_feasible(p, h0))
    throw std::logic_error("Schubert count failed although h0(E) = 2k - r");
  if (h.star_refuted())
    throw ContradictionError("general V avoids H^0(E_j(-p)) but a section was asserted or derived",
                             "pair_general_in_grassmannian",
                             "s_1 >= " + std::to_string(h.s_lower(Side::One)) + ", s_2 >= " +
                                 std::to_string(h.s_lower(Side::Two)));
  h.derive(Fact::star_condition, {rule, cite::kGenericStar, "general V satisfies the star condition", std::nullopt});
  for (Side i : {Side::One, Side::Two})
    h.derive(m_semistable(i), {rule, cite::kButler, sub("M", i) + " = M_{E_" + std::to_string(index(i) + 1) + "} semistable", std::nullopt});
  const bool strict = p.d1 > 2LL * p.r * c.g1() && p.d2 > 2LL * p.r * c.g2();
  if (strict)
    for (Side i : {Side::One, Side::Two})
      h.derive(m_stable(i), {rule, cite::kButler, sub("M", i) + " stable", std::nullopt});

  Verdict v = open_verdict(rule, h);
  for (Side i : {Side::One, Side::Two}) {
    v.certificate.push_back({rule, cite::kButler, sub("d", i) + " >= 2 r g_" + std::to_string(index(i) + 1),
                             Inequality{Rat(p.degree(i)), Rel::GreaterEq, Rat(2LL * p.r * c.genus(i))}});
    v.certificate.push_back({rule, cite::kRiemannRoch, "k = h0(E_" + std::to_string(index(i) + 1) + ")",
                             Inequality{Rat(p.k), Rel::Equal, Rat(chi_component(p.degree(i), p.r, c.genus(i)))}});
  }
  v.certificate.push_back({rule, cite::kRiemannRoch, "d_1 - d_2 = r(g_1 - g_2)",
                           Inequality{Rat(p.d1 - p.d2), Rel::Equal, Rat(static_cast<std::int64_t>(p.r) * (c.g1() - c.g2()))}});
  v.certificate.push_back({rule, cite::kSectionCount, "h0(E) = 2k - r",
                           Inequality{Rat(h0.h0_total), Rel::Equal, Rat(2 * p.k - p.r)}});
  for (Side j : {Side::One, Side::Two})
    v.certificate.push_back({rule, cite::kGenericStar, "k + h0(E_" + std::to_string(index(j) + 1) + "(-p)) <= h0(E)",
                             Inequality{Rat(p.k + h0.h0_twist[index(j)]), Rel::LessEq, Rat(h0.h0_total)}});
  add_window(v, rule, p, c);
  if (strict) {
    v.kind = VerdictKind::WStable;
    for (Side i : {Side::One, Side::Two})
      v.certificate.push_back({rule, cite::kButler, sub("d", i) + " > 2 r g_" + std::to_string(index(i) + 1),
                               Inequality{Rat(p.degree(i)), Rel::Greater, Rat(2LL * p.r * c.genus(i))}});
    v.certificate.push_back({rule, cite::kTeixidorStable, "M_1 stable", std::nullopt});
  } else {
    v.kind = VerdictKind::WSemistable;
    for (Side i : {Side::One, Side::Two})
      if (p.degree(i) == 2LL * p.r * c.genus(i))
        v.missing.push_back(sub("d", i) + " > 2 r g_" + std::to_string(index(i) + 1));
  }
  finish(v, h);
  a.fired = std::move(v);
  return a;
}

std::vector<std::string> strong_instability_missing(const HypothesisSet& h) {
  std::vector<std::string> missing;
  require_fact(h, Fact::E1_semistable, missing);
  require_fact(h, Fact::E2_semistable, missing);
  require(h.s_lower(Side::One) >= 1, "s_1 >= 1", missing);
  require(h.s_lower(Side::Two) >= 1, "s_2 >= 1", missing);
  return missing;
}

} // namespace

Verdict strong_instability(const PairNumerics& p, const CurveData& c, const HypothesisSet& given) {
  const HypothesisSet h = infer_facts(given, p, c);
  const char* rule = rules::kStrongInstability;

  Verdict v = open_verdict(rule, h);
  v.missing = strong_instability_missing(h);
  if (!v.missing.empty()) {
    v.kind = VerdictKind::Inconclusive;
    v.certificate.clear();
    v.inferred_facts = describe_inferred(h);
    return v;
  }

  const KernelNumerics kn = kernel_numerics(p, c);
  const Rat mu_kernel = Rat(kn.chi, kn.rank);
  std::array<Rat, 2> bounds;
  for (Side i : {Side::One, Side::Two}) {
    const Side j = other(i);
    v.certificate.push_back({rule, cite::kSectionDegree, sub("s", j) + " >= 1",
                             Inequality{Rat(h.s_lower(j)), Rel::GreaterEq, Rat(1)}});
    v.certificate.push_back({rule, cite::kSectionDegree, sub("d", i) + " >= r",
                             Inequality{Rat(p.degree(i)), Rel::GreaterEq, Rat(p.r)}});
  }
  for (Side i : {Side::One, Side::Two}) {
    bounds[index(i)] = instability_bound(p, c, i);
    // at w_i equal to the bound the destabilizer and M_{E,V} have the same slope
    v.certificate.push_back({rule, cite::kDestabilizer,
                             "w_" + std::to_string(index(i) + 1) + " <= " + bounds[index(i)].str() +
                                 " (slopes -g_i/w_i and mu(M) meet at the bound)",
                             Inequality{Rat(-c.genus(i)) / bounds[index(i)], Rel::Equal, mu_kernel}});
  }

  const ClaimResult claim = claim_check(p, c);
  v.certificate.push_back({rule, cite::kXiaoClifford,
                           "k <= h0(E) <= h0(E_1) + h0(E_2) - r (" + to_string(claim.which) + ")",
                           Inequality{Rat(p.k), Rel::LessEq, Rat(claim.h0_bound)}});
  v.certificate.push_back({rule, cite::kClaim, "k < d_1 + d_2 + r", Inequality{Rat(p.k), Rel::Less, Rat(claim.target)}});
  const Rat sum = bounds[0] + bounds[1];
  v.certificate.push_back({rule, cite::kWeightsSum, "w_1 + w_2 <= bound_1 + bound_2 < 1",
                           Inequality{sum, Rel::Less, Rat(1)}});
  for (Side i : {Side::One, Side::Two}) {
    v.certificate.push_back({rules::kRestrictionInstability, cite::kRestrictionUnstable,
                             "M_{E,V}|C_" + std::to_string(index(i) + 1) + " unstable",
                             Inequality{Rat(0), Rel::Greater, Rat(-p.degree(i), kn.rank)}});
    v.restriction_unstable[index(i)] = true;
  }

  if (!(sum < Rat(1) && claim.certified() && claim.bound_below_target && p.k < claim.target)) {
    v.kind = VerdictKind::Inconclusive;
    v.missing.push_back("k < d_1 + d_2 + r");
    v.certificate.clear();
    v.restriction_unstable = {false, false};
    v.inferred_facts = describe_inferred(h);
    return v;
  }
  v.kind = VerdictKind::StronglyUnstable;
  v.instability_bounds = bounds;
  finish(v, h);
  return v;
}

Verdict classify(const PairNumerics& p, const CurveData& c, const HypothesisSet& given) {
  const HypothesisSet h = infer_facts(given, p, c);

  Verdict strong = strong_instability(p, c, h);
  if (strong.kind == VerdictKind::StronglyUnstable)
    return strong;

  std::vector<Attempt> attempts;
  attempts.push_back({rules::kStrongInstability, strong.missing, std::nullopt});
  attempts.push_back(try_star_window(p, c, h));
  attempts.push_back(try_linear_series(p, c, h));
  attempts.push_back(try_complete_restrictions(p, c, h));
  for (auto& a : attempts)
    if (a.fired)
      return *a.fired;

  const Attempt& nearest = *std::min_element(attempts.begin(), attempts.end(), [](const Attempt& x, const Attempt& y) {
    return x.missing.size() < y.missing.size();
  });

  Verdict v = open_verdict(nearest.rule, h);
  v.missing = nearest.missing;

  // One-sided destabilizers still make individual restrictions unstable.
  for (Side i : {Side::One, Side::Two}) {
    if (h.s_lower(other(i)) >= 1 && p.degree(i) >= 1) {
      const std::int64_t m = p.kernel_rank();
      v.certificate.push_back({rules::kRestrictionInstability, cite::kRestrictionUnstable,
                               "M_{E,V}|C_" + std::to_string(index(i) + 1) + " unstable",
                               Inequality{Rat(0), Rel::Greater, Rat(-p.degree(i), m)}});
      v.restriction_unstable[index(i)] = true;
    }
  }
  if (v.restriction_unstable[0] || v.restriction_unstable[1]) {
    v.kind = VerdictKind::RestrictionUnstable;
    v.rule_id = rules::kRestrictionInstability;
  } else {
    v.kind = VerdictKind::Inconclusive;
    v.certificate.clear();
  }
  finish(v, h);
  return v;
}

} // namespace nodalk

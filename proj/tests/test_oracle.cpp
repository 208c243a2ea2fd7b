#include <doctest.h>

#include <sstream>

#include "nodalk/errors.hpp"
#include "nodalk/oracle.hpp"
#include "support.hpp"

using namespace nodalk;

namespace {

std::vector<std::int64_t> iota(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto t = lo; t <= hi; ++t)
    out.push_back(t);
  return out;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    out.push_back(line);
  return out;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("grid points lie strictly inside (0,1)") {
  GridSpec grid(97);
  CHECK(grid.point(1) > Rat(0));
  CHECK(grid.point(96) < Rat(1));
  CHECK_THROWS_AS(GridSpec(1), InvariantError);
}

TEST_CASE("scan_teixidor examples") {
  CurveData c(2, 2);
  auto kernel = DepthOneNumerics::vector_bundle(2, -4, -4);
  CHECK(scan_teixidor(kernel, c, GridSpec(140)) == iota(60, 80));
  auto zero = DepthOneNumerics::vector_bundle(1, 1, 2);
  CHECK(scan_teixidor(zero, c, GridSpec(97)) == iota(1, 96));
  CHECK_THROWS_AS(scan_teixidor(DepthOneNumerics{1, 0, -1, 0, 0}, c, GridSpec(10)), InvariantError);
}

TEST_CASE("scan_destabilizers examples") {
  CurveData c(2, 2);
  auto both = scan_destabilizers({1, 4, 4, 5, 1, 1}, c, GridSpec(100));
  CHECK(both.feasible().empty());
  // Component 1 is violated exactly when w1 > 2/5, component 2 when w1 < 3/5.
  for (const auto& pt : both.points) {
    CHECK(pt.violated[0] == (pt.t > 40));
    CHECK(pt.violated[1] == (pt.t < 60));
  }

  auto none = scan_destabilizers({1, 4, 4, 5, 0, 0}, c, GridSpec(100));
  CHECK(none.feasible() == iota(1, 99));

  // s = (1, 0): only the destabilizer on C_2 exists.
  auto one = scan_destabilizers({1, 4, 4, 5, 1, 0}, c, GridSpec(100));
  CHECK(one.feasible() == iota(60, 99));
  CHECK(destabilizer_region({1, 4, 4, 5, 1, 0}, c) == unit_at_least(Rat(3, 5)));

  CHECK_THROWS_AS(scan_destabilizers({1, 4, 4, 5, std::nullopt, 0}, c, GridSpec(100)), InvariantError);
}

TEST_CASE("destabilizer_region from instability bounds") {
  CurveData c(2, 2);
  CHECK(destabilizer_region({1, 4, 4, 5, 1, 1}, c).empty());
  CHECK(destabilizer_region({1, 4, 4, 5, 0, 0}, c) == RatInterval::unit_open());
  CHECK(destabilizer_region({1, 4, 4, 5, 0, 2}, c) == unit_at_most(Rat(2, 5)));
}

TEST_CASE("sweep_claim single tuples") {
  SweepRange r;
  r.g1 = r.g2 = {2, 2};
  r.r = {1, 1};
  r.d1 = r.d2 = {4, 4};
  auto rep = sweep_claim(r);
  CHECK(rep.tuples == 1);
  CHECK(rep.case_tally == std::array<std::int64_t, 3>{1, 0, 0});
  CHECK(rep.k_checks == 4); // k = 2..5
  CHECK(rep.counterexamples.empty());

  SweepRange s;
  s.g1 = {2, 2};
  s.g2 = {3, 3};
  s.r = {2, 2};
  s.d1 = {3, 3};
  s.d2 = {5, 5};
  auto rep2 = sweep_claim(s);
  CHECK(rep2.case_tally == std::array<std::int64_t, 3>{0, 0, 1});
  CHECK(rep2.k_checks == 3); // k = 3..5
}

TEST_CASE("sweep_claim default range") {
  auto rep = sweep_claim(default_claim_range());
  CHECK(rep.counterexamples.empty());
  CHECK(rep.skipped == 0);
  CHECK(rep.case_tally[0] + rep.case_tally[1] + rep.case_tally[2] == rep.tuples);
}

TEST_CASE("sweep range validation") {
  SweepRange bad;
  bad.g1 = {1, 3};
  CHECK_THROWS_AS(bad.validate(), InvariantError);
  SweepRange empty;
  empty.g1 = {3, 2};
  CHECK_NOTHROW(empty.validate());
  SweepRange k0;
  k0.k = {0, 3};
  CHECK_THROWS_AS(k0.validate(), InvariantError);
}

TEST_CASE("sweep_classify: empty range gives header only") {
  SweepRange r;
  r.g1 = {3, 2};
  std::ostringstream out;
  auto tally = sweep_classify(r, FactTemplate::GeneralSubspace, out);
  CHECK(out.str() == std::string(kSweepCsvHeader) + "\n");
  CHECK(tally.rows == 0);
}

TEST_CASE("sweep_classify: complete template is strongly unstable everywhere") {
  SweepRange r;
  r.g1 = r.g2 = {2, 3};
  std::ostringstream out;
  auto tally = sweep_classify(r, FactTemplate::Complete, out);
  CHECK(tally.rows > 0);
  CHECK(tally.by_kind[static_cast<int>(VerdictKind::StronglyUnstable)] == tally.rows);
  auto rows = lines(out.str());
  CHECK(rows.size() == static_cast<std::size_t>(tally.rows) + 1);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].find(",StronglyUnstable,") != std::string::npos);
}

TEST_CASE("sweep_classify: generic template rows meeting preconditions carry windows") {
  SweepRange r;
  r.g1 = r.g2 = {2, 4};
  r.r = {1, 1};
  std::ostringstream out;
  sweep_classify(r, FactTemplate::GeneralSubspace, out);
  int fired = 0;
  for (const auto& row : lines(out.str())) {
    if (row.find("complete_restrictions") == std::string::npos || row.find("Inconclusive") != std::string::npos)
      continue;
    ++fired;
    CHECK((row.find(",WSemistable,") != std::string::npos || row.find(",WStable,") != std::string::npos));
  }
  CHECK(fired > 0);
}

TEST_CASE("sweep_classify row format") {
  SweepRange r;
  r.g1 = r.g2 = {2, 2};
  r.r = {1, 1};
  r.d1 = r.d2 = {4, 4};
  r.k = {3, 3};
  r.k_above_r = false;
  std::ostringstream out;
  sweep_classify(r, FactTemplate::Star, out);
  CHECK(lines(out.str()).at(1) == "2,2,1,4,4,3,0,0,WSemistable,3/7,4/7,star_window");
}

TEST_CASE("fact templates") {
  for (auto t : {FactTemplate::Bare, FactTemplate::Complete, FactTemplate::GeneralSubspace, FactTemplate::Star,
                 FactTemplate::LinearSeries})
    CHECK(fact_template_from_string(to_string(t)) == t);
  CHECK_FALSE(fact_template_from_string("claim").has_value());
  CHECK(template_facts(FactTemplate::Star).has(Fact::star_condition));
  CHECK(template_facts(FactTemplate::Bare).facts().empty());
}

} // TEST_SUITE

#include <doctest.h>

#include "nodalk/errors.hpp"
#include "nodalk/pair.hpp"
#include "support.hpp"

using namespace nodalk;

TEST_SUITE("pair") {

TEST_CASE("pair validation") {
  CHECK_NOTHROW((PairNumerics{1, 4, 4, 3, std::nullopt, std::nullopt}.validate()));
  CHECK_THROWS_AS((PairNumerics{0, 4, 4, 3, std::nullopt, std::nullopt}.validate()), InvariantError);
  CHECK_THROWS_AS((PairNumerics{1, 4, 4, 1, std::nullopt, std::nullopt}.validate()), InvariantError);
  CHECK_THROWS_AS((PairNumerics{1, -1, 4, 3, std::nullopt, std::nullopt}.validate()), InvariantError);
  CHECK_THROWS_AS((PairNumerics{1, 4, 4, 3, -1, std::nullopt}.validate()), InvariantError);
  CHECK_THROWS_AS((PairNumerics{1, 4, 4, 3, std::nullopt, 4}.validate()), InvariantError);
}

TEST_CASE("restricted dimensions") {
  PairNumerics p{1, 4, 4, 5, 2, 0};
  CHECK(p.restricted_dim(Side::One) == 5);
  CHECK(p.restricted_dim(Side::Two) == 3);
  PairNumerics unknown{1, 4, 4, 5, std::nullopt, std::nullopt};
  CHECK_FALSE(unknown.restricted_dim(Side::One).has_value());
}

TEST_CASE("kernel_numerics examples") {
  CurveData c22(2, 2);
  auto a = kernel_numerics({1, 4, 4, 5, std::nullopt, std::nullopt}, c22);
  CHECK(a == KernelNumerics{4, -20, -8, -8});
  CHECK(a.chi_restriction_1 + a.chi_restriction_2 - a.rank == a.chi);

  PairNumerics p3{1, 4, 4, 3, std::nullopt, std::nullopt};
  auto b = kernel_numerics(p3, c22);
  CHECK(b == KernelNumerics{2, -14, -6, -6});
  CHECK(chi_total(kernel_depth_one(p3), c22) == b.chi);
  CHECK(kernel_depth_one(p3) == DepthOneNumerics::vector_bundle(2, -4, -4));

  auto d = kernel_numerics({1, 5, 6, 4, std::nullopt, std::nullopt}, CurveData(2, 3));
  CHECK(d == KernelNumerics{3, -23, -8, -12});
  CHECK(d.chi_restriction(Side::Two) == -12);
}

TEST_CASE("h0_semistable_bound examples") {
  CHECK(h0_semistable_bound(2, 1, 4) == 3);
  CHECK(h0_semistable_bound(2, 1, 2) == 2);
  CHECK(h0_semistable_bound(3, 2, 5) == 4);
  CHECK(h0_semistable_bound(2, 1, -3) == 0);
  CHECK(h0_semistable_bound(2, 1, 0) == 1);
  CHECK(h0_semistable_bound(2, 1, 3) == 2);
  CHECK_THROWS_AS(h0_semistable_bound(1, 1, 3), InvariantError);
}

TEST_CASE("slope boundary at 2g-2 goes to the Clifford side") {
  CHECK_FALSE(slope_above_canonical(2, 1, 2));
  CHECK(slope_above_canonical(2, 1, 3));
  CHECK_FALSE(slope_above_canonical(3, 2, 8));
  CHECK(slope_above_canonical(3, 2, 9));
}

TEST_CASE("h0_total and h0_twist_down examples") {
  CHECK(h0_total(3, 3, 1) == 5);
  CHECK(h0_total(2, 2, 2) == 2);
  CHECK(h0_total(4, 4, 1) == 7);
  CHECK_THROWS_AS(h0_total(0, 0, 1), InvariantError);
  CHECK(h0_twist_down(3, 1) == 2);
  CHECK(h0_twist_down(3, 3) == 0);
  CHECK(h0_twist_down(4, 1) == 3);
  CHECK_THROWS_AS(h0_twist_down(1, 2), InvariantError);
}

TEST_CASE("claim_check examples") {
  CurveData c22(2, 2);
  auto one = claim_check({1, 4, 4, 5, std::nullopt, std::nullopt}, c22);
  CHECK(one.which == ClaimCase::BothAboveCanonical);
  CHECK(one.h0_bound == 5);
  CHECK(one.target == 9);
  CHECK(one.k_within_bound);
  CHECK(one.certified());

  auto two = claim_check({1, 2, 4, 3, std::nullopt, std::nullopt}, c22);
  CHECK(two.which == ClaimCase::Mixed);
  CHECK(two.h0_bound_1 == 2);
  CHECK(two.h0_bound_2 == 3);
  CHECK(two.h0_bound == 4);
  CHECK(two.target == 7);
  CHECK(two.certified());

  auto three = claim_check({1, 2, 2, 2, std::nullopt, std::nullopt}, c22);
  CHECK(three.which == ClaimCase::BothClifford);
  CHECK(three.h0_bound == 3);
  CHECK(three.target == 5);

  auto mixed_rank = claim_check({2, 3, 5, 3, std::nullopt, std::nullopt}, CurveData(2, 3));
  CHECK(mixed_rank.which == ClaimCase::BothClifford);
  CHECK(mixed_rank.h0_bound == 1 + 2 + 2 + 2 - 2);
  CHECK(mixed_rank.h0_bound == 5);
  CHECK(mixed_rank.target == 10);

  auto beyond = claim_check({1, 4, 4, 6, std::nullopt, std::nullopt}, c22);
  CHECK_FALSE(beyond.k_within_bound);
  CHECK(beyond.certified());

  CHECK(to_string(ClaimCase::Mixed) == "case2");
}

TEST_CASE("claim_check rejects degree zero on a Clifford side") {
  CurveData c22(2, 2);
  CHECK_THROWS_AS(claim_check({1, 0, 4, 2, std::nullopt, std::nullopt}, c22), HypothesisError);
  CHECK_THROWS_AS(claim_check({1, 0, 0, 2, std::nullopt, std::nullopt}, c22), HypothesisError);
}

TEST_CASE("Brill-Noether number examples") {
  CHECK(brill_noether_rho(2, 4, 3) == 2);
  CHECK(brill_noether_rho(2, 2, 2) == 0);
  CHECK(brill_noether_rho(3, 3, 2) == 1);
  CHECK(brill_noether_rho(2, 1, 2) == -2);
  CHECK_THROWS_AS(brill_noether_rho(1, 1, 1), InvariantError);
}

TEST_CASE("linear series threshold examples") {
  CHECK(gkd_nonempty_general(2, 4, 3));
  CHECK_FALSE(gkd_nonempty_general(2, 1, 2));
  CHECK(gkd_nonempty_general(2, 2, 2));
  CHECK(brill_noether_rho(2, 2, 2) == 0);
  // 4 >= 2 + 3 - 1 - 2/3 = 10/3.
  CHECK(nodalk::Rat(4) >= nodalk::Rat(10, 3));
}

} // TEST_SUITE

#include <doctest.h>

#include "aarp/axioms.hpp"
#include "aarp/errors.hpp"
#include "aarp/oracle.hpp"
#include "support/fixtures.hpp"

using namespace aarp;
using namespace aarp::testing;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

DataSet two_linear(Point p1, long m1, Point x1, Point p2, long m2, Point x2) {
  const Universe u = Universe::from_points({x1, x2});
  return DataSet(u, {linear_obs(p1, Rational(m1), {0}), linear_obs(p2, Rational(m2), {1})});
}

// Pairwise weak axiom straight from the definition.
bool warp_holds(const DataSet& d) {
  const auto& u = d.universe();
  for (const auto& oi : d.observations())
    for (const auto& oj : d.observations())
      for (auto xi : oi.chosen)
        for (auto xj : oj.chosen)
          if (oj.budget.contains(u.bundle(xi)) && oi.budget.contains(u.bundle(xj)) && !oi.is_chosen(u.bundle(xj)))
            return false;
  return true;
}

void require_replays(const DataSet& d, const Verdict& v) {
  REQUIRE_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  const ReplayResult r = replay_witness(d, *v.witness);
  INFO(r.reason);
  CHECK(r.ok);
}

}  // namespace

TEST_CASE("WAARP") {
  CHECK(check_waarp(DataSet(abc(), {}), Theory::trivial()).pass);

  const DataSet warp = two_linear(pt(1, 1), 10, pt(10, 0), pt(1, 2), 10, pt(0, 5));
  const Verdict v = check_waarp(warp, Theory::trivial());
  require_replays(warp, v);

  for (const auto& d : small_datasets()) REQUIRE(check_waarp(d, Theory::trivial()).pass == warp_holds(d));
}

TEST_CASE("SARP") {
  const DataSet no_edge = two_linear(pt(1, 2), 10, pt(10, 0), pt(2, 1), 10, pt(0, 10));
  CHECK(check_sarp(no_edge).pass);

  const DataSet warp = two_linear(pt(1, 1), 10, pt(10, 0), pt(1, 2), 10, pt(0, 5));
  const Verdict v = check_sarp(warp);
  require_replays(warp, v);
  CHECK(v.witness->observations.size() == 2);

  Rng rng(31);
  for (int it = 0; it < 100; ++it) CHECK(check_sarp(preorder_data(rng, 5, 6)).pass);
}

TEST_CASE("generic SAARP with the identity equals SARP") {
  for (const auto& d : small_datasets()) REQUIRE(check_saarp_generic(d, Theory::trivial()).pass == check_sarp(d).pass);
}

TEST_CASE("generic SAARP") {
  const Universe u = abc();
  for (const auto& o : all_observations(3, 3)) {
    const DataSet single(u, {o});
    // Only the identity maps the chosen set into its own budget without leaving C(B).
    CHECK(check_saarp_generic(single, Theory::trivial()).pass);
  }

  // a ≻ c ≻ d ≻ b, and the swap a↔b turns a R b into b R a.
  const Universe four = Universe::from_labels({"a", "b", "c", "d"});
  const DataSet d(four, {explicit_obs({0, 2}, {0}), explicit_obs({2, 3}, {2}), explicit_obs({1, 3}, {3})});
  const Theory swap = Theory::permutation(4, {{1, 0, 2, 3}});
  CHECK(check_sarp(d).pass);
  CHECK(check_waarp(d, swap).pass);
  const Verdict v = check_saarp_generic(d, swap);
  require_replays(d, v);
  CHECK(v.witness->observations.size() >= 3);
  CHECK_FALSE(brute_force_rationalizable(d, swap, {.require_transitive = true}).rationalizable);
}

TEST_CASE("HARP") {
  const DataSet d = two_linear(pt(1, 1), 4, pt(4, 0), pt(1, 2), 4, pt(0, 2));
  const Verdict v = check_harp(d);
  require_replays(d, v);
  CHECK(v.witness->observations == std::vector<std::size_t>{0, 1});
  CHECK(v.witness->cycle_weights == std::vector<std::optional<Rational>>{Rational(2), Rational(1)});
  CHECK(harp_violation_oracle(d));

  const Universe one = Universe::from_points({pt(2, 2)});
  CHECK(check_harp(DataSet(one, {linear_obs(pt(1, 1), Rational(4), {0})})).pass);

  Rng rng(32);
  for (int it = 0; it < 50; ++it) CHECK(check_harp(cobb_douglas_data(rng, 2 + it % 2, 5)).pass);
}

TEST_CASE("HARP with unbounded edges") {
  const DataSet d = two_linear(pt(1, 0), 1, pt(1, 0), pt(0, 1), 1, pt(0, 1));
  const Verdict v = check_harp(d);
  require_replays(d, v);
  REQUIRE(v.witness->cycle_weights.size() == 2);
  CHECK_FALSE(v.witness->cycle_weights[0].has_value());
  CHECK(harp_violation_oracle(d));
}

TEST_CASE("HARP rejects a zero chosen vector") {
  const Universe u = Universe::from_points({pt(0, 0)});
  CHECK_THROWS_AS(check_harp(DataSet(u, {linear_obs(pt(1, 1), Rational(1), {0})})), InvalidData);
}

TEST_CASE("QARP") {
  const DataSet d = two_linear(pt(1, 2), 6, pt(2, 2), pt(2, 1), 12, pt(6, 0));
  const Verdict v = check_qarp(d);
  require_replays(d, v);
  CHECK(v.witness->cycle_weights == std::vector<std::optional<Rational>>{Rational(0), Rational(3)});
  CHECK(qarp_violation_oracle(d));

  // Boundary choices with cross weights -2 and -1.
  const DataSet ok = two_linear(pt(1, 2), 2, pt(2, 0), pt(2, 1), 2, pt(0, 2));
  CHECK(check_qarp(ok).pass);

  Rng rng(33);
  for (int it = 0; it < 50; ++it) CHECK(check_qarp(quasilinear_data(rng, 2 + it % 2, 5)).pass);
}

TEST_CASE("QARP needs a positive numeraire price") {
  const Universe u = Universe::from_points({pt(0, 2)});
  CHECK_THROWS_AS(check_qarp(DataSet(u, {linear_obs(pt(0, 1), Rational(2), {0})})), InvalidData);
}

TEST_CASE("IARP") {
  const Point zero = pt(0, 0);
  const std::vector<AffineMap> id{AffineMap::mixing(Rational(1), zero)};
  const std::vector<AffineMap> halves{AffineMap::mixing(Rational(1), zero), AffineMap::mixing(Rational(1, 2), zero),
                                      AffineMap::mixing(Rational(2), zero)};

  // (2,2) chosen over (1,0); (2,0) chosen over (4,4). Halving (2,0) lands on (1,0)
  // while doubling (2,2) lands on (4,4).
  const Universe u = Universe::from_points({pt(2, 2), pt(1, 0), pt(2, 0), pt(4, 4)});
  const DataSet d(u, {explicit_obs({0, 1}, {0}), explicit_obs({2, 3}, {2})});
  CHECK(check_sarp(d).pass);
  CHECK(check_iarp(d, id).pass == check_sarp(d).pass);
  const Verdict v = check_iarp(d, halves);
  require_replays(d, v);
  CHECK(v.axiom == "iarp");

  CHECK_THROWS_AS(check_iarp(d, {AffineMap::mixing(Rational(1, 2), zero)}), InvalidData);

  Rng rng(34);
  const Point weights{Rational(2), Rational(1)};
  // {1, 1/2, 2} is not closed under composition, so the search is bounded.
  for (int it = 0; it < 10; ++it) {
    const DataSet ev = expected_value_data(rng, 2, 4, 4, weights);
    CHECK(check_iarp(ev, halves, {2000}).pass);
  }
}

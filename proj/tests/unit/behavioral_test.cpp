#include <doctest.h>

#include "aarp/axioms.hpp"
#include "aarp/behavioral.hpp"
#include "aarp/errors.hpp"
#include "aarp/oracle.hpp"
#include "support/fixtures.hpp"

using namespace aarp;
using namespace aarp::testing;

namespace {

constexpr std::size_t a = 0, b = 1, c = 2, d = 3;

Relation chain(std::size_t n) {
  Relation r(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) r.insert(x, y);
  return r;
}

Universe abcd() { return Universe::from_labels({"a", "b", "c", "d"}); }

DataSet with_choices(const DataSet& base, const std::vector<std::vector<std::size_t>>& budgets,
                     const std::vector<std::vector<std::size_t>>& chosen) {
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < budgets.size(); ++i) obs.push_back(explicit_obs(budgets[i], chosen[i]));
  return DataSet(base.universe(), obs);
}

}  // namespace

TEST_CASE("k-max sets") {
  const Relation r = chain(3);
  CHECK(k_max_set(r, {a, b, c}, 3) == std::vector<std::size_t>{a, b, c});
  CHECK(k_max_set(r, {a, b, c}, 1) == std::vector<std::size_t>{a});
  CHECK(k_max_set(r, {a, b, c}, 2) == std::vector<std::size_t>{a, b});

  Relation tie = r;
  tie.insert(b, a);
  CHECK(k_max_set(tie, {a, b, c}, 1) == std::vector<std::size_t>{a, b});
  CHECK_THROWS_AS(k_max_set(r, {a, b}, 0), InvalidData);
  CHECK_THROWS_AS(k_max_set(Relation::diagonal(3), {a, b}, 1), InvalidData);
}

TEST_CASE("truncated data sets") {
  const DataSet base(abc(), {explicit_obs({a, b, c}, {a})});
  const DataSet t = build_truncated_dataset(base, {{b}});
  REQUIRE(t.size() == 2);
  CHECK(t[0].budget.as_explicit().members == std::vector<std::size_t>{a, b});
  CHECK(t[0].chosen == std::vector<std::size_t>{a});
  CHECK(t[1].budget.as_explicit().members == std::vector<std::size_t>{b, c});
  CHECK(t[1].chosen == std::vector<std::size_t>{c});

  const DataSet whole = build_truncated_dataset(base, {{b, c}});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == base[0]);

  CHECK_THROWS_AS(build_truncated_dataset(base, {{a}}), InvalidData);
  CHECK_THROWS_AS(build_truncated_dataset(base, {}), InvalidData);
  CHECK_THROWS_AS(build_truncated_dataset(base, {{}}, 1), InvalidData);
}

TEST_CASE("truncated data sets satisfy the data invariants") {
  Rng rng(41);
  for (int it = 0; it < 200; ++it) {
    const DataSet base = preorder_data(rng, 4, 3);
    std::vector<std::vector<std::size_t>> retained;
    for (const auto& o : base.observations()) {
      std::vector<std::size_t> keep;
      for (auto x : o.budget.as_explicit().members)
        if (!o.is_chosen(Bundle{x, {}}) && uniform(rng, 0, 1)) keep.push_back(x);
      retained.push_back(keep);
    }
    const DataSet t = build_truncated_dataset(base, retained);
    CHECK_NOTHROW(DataSet(t.universe(), t.observations()));
    std::size_t expected = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
      expected += 1 + base[i].budget.as_explicit().members.size() - base[i].chosen.size() - retained[i].size();
    CHECK(t.size() == expected);
  }
}

TEST_CASE("S-SAARP") {
  const Theory id = Theory::trivial();
  const DataSet fast(abc(), {explicit_obs({a, b, c}, {a}), explicit_obs({b, c}, {b})});
  const Verdict v = check_s_saarp(fast, id, id);
  CHECK(v.pass);
  REQUIRE(v.selection.has_value());
  CHECK((*v.selection)[0] == std::vector<std::size_t>{a, b, c});
  CHECK((*v.selection)[1] == std::vector<std::size_t>{b, c});

  // Opposite choices from the same pair: every consideration set fails.
  const DataSet flip(abc(), {explicit_obs({a, b}, {a}), explicit_obs({a, b}, {b})});
  CHECK_FALSE(check_s_saarp(flip, id, id).pass);
  CHECK_FALSE(sequential_oracle(flip, id, id).rationalizable);

  // Forward simulation: R1 is the cycle a ≻ b ≻ c ≻ a, R2 the order b ≻ a ≻ c.
  const DataSet cyc(abc(), {explicit_obs({a, b}, {a}), explicit_obs({b, c}, {b}), explicit_obs({a, c}, {c})});
  CHECK_FALSE(check_sarp(cyc).pass);
  const Verdict s = check_s_saarp(cyc, id, id);
  REQUIRE(s.pass);
  REQUIRE(s.selection.has_value());
  std::vector<std::vector<std::size_t>> budgets, gammas = *s.selection;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& members = cyc[i].budget.as_explicit().members;
    budgets.push_back(members);
    CHECK(std::includes(members.begin(), members.end(), gammas[i].begin(), gammas[i].end()));
    CHECK(std::includes(gammas[i].begin(), gammas[i].end(), cyc[i].chosen.begin(), cyc[i].chosen.end()));
  }
  std::vector<std::vector<std::size_t>> chosen;
  for (const auto& o : cyc.observations()) chosen.push_back(o.chosen);
  CHECK(check_waarp(with_choices(cyc, budgets, gammas), id).pass);
  CHECK(check_saarp_generic(with_choices(cyc, gammas, chosen), id).pass);
  CHECK(sequential_oracle(cyc, id, id).rationalizable);
}

TEST_CASE("GE-SAARP") {
  const Theory id = Theory::trivial();
  const Universe u = abcd();

  // a ≻ b ≻ c ≻ d, each choice second best.
  const DataSet second(u, {explicit_obs({a, b, c}, {b}), explicit_obs({b, c, d}, {c})});
  const Verdict v = check_ge_saarp(second, id, 2);
  CHECK(v.pass);
  REQUIRE(v.selection.has_value());
  CHECK(check_saarp_generic(build_truncated_dataset(second, *v.selection, 2), id).pass);
  CHECK(good_enough_oracle(second, id, 2).rationalizable);

  // a ~ b above c and d, yet d is chosen from the same budget with a and b above it.
  const DataSet worst(u, {explicit_obs({a, b, c, d}, {d}), explicit_obs({a, b, c, d}, {a, b})});
  CHECK_FALSE(check_ge_saarp(worst, id, 2).pass);
  CHECK_FALSE(good_enough_oracle(worst, id, 2).rationalizable);

  // k at least every budget size: empty retained sets are admissible.
  const DataSet flip(abc(), {explicit_obs({a, b}, {a}), explicit_obs({a, b}, {b})});
  const Verdict big = check_ge_saarp(flip, id, 3);
  CHECK(big.pass);
  CHECK_FALSE(big.notes.empty());
  CHECK(check_saarp_generic(build_truncated_dataset(flip, {{}, {}}), id).pass);
  CHECK_FALSE(check_ge_saarp(flip, id, 1).pass);
  CHECK_FALSE(check_ge_saarp(DataSet(abc(), {explicit_obs({a, b, c}, {a, b, c})}), id, 2).pass);
}

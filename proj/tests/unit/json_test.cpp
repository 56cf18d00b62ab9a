#include <doctest.h>

#include <sstream>

#include "aarp/axioms.hpp"
#include "aarp/behavioral.hpp"
#include "aarp/errors.hpp"
#include "aarp/json_io.hpp"
#include "support/fixtures.hpp"

using namespace aarp;
using namespace aarp::testing;

namespace {

std::string parse_error_path(const std::string& text) {
  try {
    dataset_from_text(text);
  } catch (const ParseError& e) {
    return e.path();
  }
  return "<no error>";
}

void round_trip(const Verdict& v, const Universe& u) {
  const Json j = verdict_to_json(v, u);
  const Verdict back = verdict_from_json(Json::parse(j.dump()), u);
  REQUIRE(back == v);
}

// Observation numbers listed on the human "cycle:" line, converted back to 0-based.
std::vector<std::size_t> human_cycle(const std::string& text) {
  std::vector<std::size_t> out;
  const auto pos = text.find("cycle:");
  if (pos == std::string::npos) return out;
  std::istringstream line(text.substr(pos + 6, text.find('\n', pos) - pos - 6));
  std::size_t i;
  while (line >> i) out.push_back(i - 1);
  return out;
}

}  // namespace

TEST_CASE("data set round trip") {
  Rng rng(51);
  std::vector<DataSet> sets;
  for (int i = 0; i < 20; ++i) {
    sets.push_back(cobb_douglas_data(rng, 3, 4));
    sets.push_back(preorder_data(rng, 4, 3));
    sets.push_back(random_linear(rng, 3, 2, i % 2 == 0));
  }
  const Universe mixed({{"x", {Rational(1), Rational(2)}}, {"y", {Rational(3), Rational(-1, 2)}}});
  sets.emplace_back(mixed, std::vector<Observation>{explicit_obs({0, 1}, {1})});
  for (const auto& d : sets) {
    const Json j = dataset_to_json(d);
    REQUIRE(dataset_from_text(j.dump()) == d);
  }
}

TEST_CASE("data set references by label, point and index") {
  const DataSet d = dataset_from_text(R"({
    "universe": [{"label": "x", "point": ["1", "2"]}, ["3", "1/2"], [4, 0]],
    "observations": [
      {"budget": {"explicit": ["x", ["3", "1/2"], 2]}, "chosen": [0]},
      {"budget": {"linear": {"p": ["1", "1"], "m": "7/2"}}, "chosen": [["3", "1/2"]]}
    ]})");
  CHECK(d.size() == 2);
  CHECK(d[0].budget.as_explicit().members == std::vector<std::size_t>{0, 1, 2});
  CHECK(d[1].chosen == std::vector<std::size_t>{1});
  CHECK((d.universe()[2].point == Point{Rational(4), Rational(0)}));
}

TEST_CASE("parse errors carry field paths") {
  CHECK(parse_error_path(R"({"universe": [["1","1"]], "observations": [{"budget": {"linear": {"p": ["1","1"], "m": "1/0"}}, "chosen": [0]}]})") ==
        "observations[0].budget.linear.m");
  CHECK(parse_error_path(R"({"universe": [["1","1"]], "observations": [{"budget": {"linear": {"p": ["1", 0.5], "m": "2"}}, "chosen": [0]}]})") ==
        "observations[0].budget.linear.p[1]");
  CHECK(parse_error_path(R"({"universe": ["a","b"], "observations": [{"budget": {"explicit": ["a"]}, "chosen": ["z"]}]})") ==
        "observations[0].chosen[0]");
  CHECK(parse_error_path(R"({"universe": ["a","b"], "observations": [{"budget": {"explicit": ["a"]}}]})") ==
        "observations[0].chosen");
  CHECK(parse_error_path(R"({"universe": ["a","b"], "observations": [{"budget": {"explicit": [5]}, "chosen": [0]}]})") ==
        "observations[0].budget.explicit[0]");
  CHECK(parse_error_path(R"({"universe": ["a","a"], "observations": []})") == "universe");
  CHECK(parse_error_path(R"({"observations": []})") == "universe");
  CHECK(parse_error_path(R"({"universe": ["a"], "observations": [{"budget": {"explicit": ["a"]}, "chosen": []}]})") ==
        "observations");
  CHECK(parse_error_path("{not json") == "");
}

TEST_CASE("verdict round trip") {
  for (const auto& d : small_datasets()) {
    round_trip(check_waarp(d, swap_ab()), d.universe());
    round_trip(check_saarp_generic(d, swap_ab()), d.universe());
  }
  Rng rng(52);
  for (int i = 0; i < 100; ++i) {
    const DataSet d = random_linear(rng, 4, 2, i % 2 == 0);
    round_trip(check_harp(d), d.universe());
    round_trip(check_qarp(d), d.universe());
    round_trip(check_waarp(d, Theory::scaling()), d.universe());
    round_trip(check_waarp(d, Theory::translation()), d.universe());
  }
  const Universe u = Universe::from_points({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  const DataSet inf(u, {linear_obs({Rational(1), Rational(0)}, Rational(1), {0}),
                        linear_obs({Rational(0), Rational(1)}, Rational(1), {1})});
  const Verdict h = check_harp(inf);
  CHECK(verdict_to_json(h, u)["witness"]["cycle_weights"][0] == "inf");
  round_trip(h, u);

  const DataSet ge(Universe::from_labels({"a", "b", "c", "d"}), {explicit_obs({0, 1, 2}, {1}), explicit_obs({1, 2, 3}, {2})});
  round_trip(check_ge_saarp(ge, Theory::trivial(), 2), ge.universe());
  round_trip(check_s_saarp(ge, Theory::trivial(), Theory::trivial()), ge.universe());
}

TEST_CASE("transform round trip") {
  const std::vector<Transform> fs{Identity{},
                                  Permutation{{2, 0, 1}},
                                  Scaling{Rational(3, 2)},
                                  Translation{Rational(-5)},
                                  AffineMap::mixing(Rational(1, 3), {Rational(1), Rational(2)}),
                                  AffineMap{Rational(1), {Rational(1, 2), Rational(0)}}};
  for (const auto& f : fs) CHECK(transform_from_json(transform_to_json(f)) == f);
  CHECK(transform_to_json(Scaling{Rational(2)}) == Json{{"alpha", "2"}});
  CHECK(transform_to_json(Translation{Rational(1, 2)}) == Json{{"t", "1/2"}});
  CHECK(transform_to_json(AffineMap::mixing(Rational(1, 2), {Rational(4)})) == Json{{"alpha", "1/2"}, {"z", {"4"}}});
  CHECK_THROWS_AS(transform_from_json(Json{{"alpha", "0"}}), ParseError);
}

TEST_CASE("relation round trip") {
  const Universe u = abc();
  Relation r = Relation::diagonal(3);
  r.insert(0, 2);
  r.insert(2, 1);
  CHECK(relation_from_json(relation_to_json(r, u), u) == r);
}

TEST_CASE("human and JSON reports agree") {
  for (const auto& d : small_datasets()) {
    for (const Verdict& v : {check_waarp(d, swap_ab()), check_saarp_generic(d, Theory::trivial())}) {
      const Json j = verdict_to_json(v, d.universe());
      const std::string text = render_human(j);
      REQUIRE(text.rfind(v.axiom + ": " + (v.pass ? "pass" : "violation") + "\n", 0) == 0);
      if (v.witness) REQUIRE(human_cycle(text) == v.witness->observations);
      else REQUIRE(text.find("cycle:") == std::string::npos);
    }
  }
}

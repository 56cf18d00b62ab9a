#pragma once

// Instance enumeration and random generators shared by the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "aarp/data.hpp"
#include "aarp/theory.hpp"

namespace aarp::testing {

inline Universe abc() { return Universe::from_labels({"a", "b", "c"}); }

inline Observation explicit_obs(std::vector<std::size_t> budget, std::vector<std::size_t> chosen) {
  return Observation{Budget(ExplicitBudget{std::move(budget)}), std::move(chosen)};
}

inline Observation linear_obs(Point p, Rational m, std::vector<std::size_t> chosen) {
  return Observation{Budget(LinearBudget{std::move(p), std::move(m)}), std::move(chosen)};
}

inline std::vector<std::size_t> bits_to_set(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

/// Every (budget, nonempty choice) pair over n alternatives, budgets of size ≤ max_budget.
inline std::vector<Observation> all_observations(std::size_t n, std::size_t max_budget) {
  std::vector<Observation> out;
  for (unsigned b = 1; b < (1u << n); ++b) {
    if (static_cast<std::size_t>(__builtin_popcount(b)) > max_budget) continue;
    for (unsigned c = b; c > 0; c = (c - 1) & b) out.push_back(explicit_obs(bits_to_set(b), bits_to_set(c)));
  }
  return out;
}

/// Universe {a,b,c}; all data sets with one or two explicit budgets.
inline std::vector<DataSet> small_datasets(bool include_single = true) {
  const auto obs = all_observations(3, 3);
  std::vector<DataSet> out;
  if (include_single)
    for (const auto& o : obs) out.emplace_back(abc(), std::vector<Observation>{o});
  for (const auto& o1 : obs)
    for (const auto& o2 : obs) out.emplace_back(abc(), std::vector<Observation>{o1, o2});
  return out;
}

inline Theory swap_ab() { return Theory::permutation(3, {{1, 0, 2}}); }

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Rational frac(std::int64_t num, std::int64_t den) {
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

inline Rational random_positive(Rng& rng, std::int64_t num_hi = 9, std::int64_t den_hi = 4) {
  return frac(uniform(rng, 1, num_hi), uniform(rng, 1, den_hi));
}

/// Linear-budget instance; chosen points are random positive directions pushed to
/// the budget line. `tiny` draws from a small integer range so that exact ties
/// (boundary cycles) are common.
inline DataSet random_linear(Rng& rng, std::size_t observations, std::size_t dim, bool tiny) {
  std::vector<Point> points;
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < observations; ++i) {
    Point p(dim), q(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      p[k] = tiny ? Rational(uniform(rng, 1, 2)) : random_positive(rng);
      q[k] = tiny ? Rational(uniform(rng, 1, 3)) : random_positive(rng);
    }
    const Rational m = tiny ? Rational(uniform(rng, 2, 6)) : random_positive(rng, 20, 3);
    Point x = scaled(q, m / dot(p, q));
    // Occasionally reuse an earlier bundle direction, which creates exact product-one cycles.
    if (!points.empty() && uniform(rng, 0, 3) == 0) {
      const Point& base = points[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(points.size()) - 1))];
      x = scaled(base, m / dot(p, base));
    }
    std::size_t index = points.size();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (points[j] == x) index = j;
    if (index == points.size()) points.push_back(x);
    obs.push_back(linear_obs(p, m, {index}));
  }
  return DataSet(Universe::from_points(points), std::move(obs));
}

/// Choices generated by maximizing a random total preorder (ranks with ties).
inline DataSet preorder_data(Rng& rng, std::size_t n, std::size_t observations) {
  std::vector<std::string> labels;
  std::vector<std::int64_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    rank[i] = uniform(rng, 0, static_cast<std::int64_t>(n) / 2 + 1);
  }
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < observations; ++i) {
    unsigned mask = 0;
    while (mask == 0) mask = static_cast<unsigned>(uniform(rng, 1, (1 << n) - 1));
    const auto budget = bits_to_set(mask);
    std::int64_t best = -1;
    for (auto x : budget) best = std::max(best, rank[x]);
    std::vector<std::size_t> chosen;
    for (auto x : budget)
      if (rank[x] == best) chosen.push_back(x);
    obs.push_back(explicit_obs(budget, chosen));
  }
  return DataSet(Universe::from_labels(labels), std::move(obs));
}

inline std::size_t add_point(std::vector<Point>& points, const Point& x) {
  for (std::size_t j = 0; j < points.size(); ++j)
    if (points[j] == x) return j;
  points.push_back(x);
  return points.size() - 1;
}

/// Cobb-Douglas demand x_k = a_k m / p_k with rational shares a summing to one.
inline DataSet cobb_douglas_data(Rng& rng, std::size_t dim, std::size_t observations) {
  Point a(dim);
  Rational total = 0;
  for (auto& v : a) {
    v = Rational(uniform(rng, 1, 5));
    total += v;
  }
  for (auto& v : a) v /= total;
  std::vector<Point> points;
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < observations; ++i) {
    Point p(dim), x(dim);
    for (auto& v : p) v = random_positive(rng);
    const Rational m = random_positive(rng, 20, 2);
    for (std::size_t k = 0; k < dim; ++k) x[k] = a[k] * m / p[k];
    obs.push_back(linear_obs(p, m, {add_point(points, x)}));
  }
  return DataSet(Universe::from_points(points), std::move(obs));
}

/// Demand for x_1 + Σ a_k log x_k (good 1 the numeraire): x_k = a_k p_1 / p_k.
inline DataSet quasilinear_data(Rng& rng, std::size_t dim, std::size_t observations) {
  Point a(dim);
  for (std::size_t k = 1; k < dim; ++k) a[k] = random_positive(rng, 5, 2);
  std::vector<Point> points;
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < observations; ++i) {
    Point p(dim), x(dim);
    for (auto& v : p) v = random_positive(rng);
    Rational spent = 0;
    for (std::size_t k = 1; k < dim; ++k) {
      x[k] = a[k] * p[0] / p[k];
      spent += p[k] * x[k];
    }
    const Rational m = spent + random_positive(rng, 10, 1);
    x[0] = (m - spent) / p[0];
    obs.push_back(linear_obs(p, m, {add_point(points, x)}));
  }
  return DataSet(Universe::from_points(points), std::move(obs));
}

/// Explicit budgets over lotteries, choices maximizing a linear expected value.
inline DataSet expected_value_data(Rng& rng, std::size_t dim, std::size_t n, std::size_t observations,
                                   const Point& weights) {
  std::vector<Point> points;
  while (points.size() < n) {
    Point x(dim);
    for (auto& v : x) v = frac(uniform(rng, 0, 4), 4);
    add_point(points, x);
  }
  std::vector<Observation> obs;
  for (std::size_t i = 0; i < observations; ++i) {
    unsigned mask = 0;
    while (mask == 0) mask = static_cast<unsigned>(uniform(rng, 1, (1 << n) - 1));
    const auto budget = bits_to_set(mask);
    Rational best = dot(weights, points[budget.front()]);
    for (auto x : budget) best = std::max(best, dot(weights, points[x]));
    std::vector<std::size_t> chosen;
    for (auto x : budget)
      if (dot(weights, points[x]) == best) chosen.push_back(x);
    obs.push_back(explicit_obs(budget, chosen));
  }
  return DataSet(Universe::from_points(points), std::move(obs));
}

}  // namespace aarp::testing

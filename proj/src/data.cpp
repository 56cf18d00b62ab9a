#include "aarp/data.hpp"

#include <algorithm>

#include "aarp/errors.hpp"

namespace aarp {

namespace {

void sort_unique(std::vector<std::size_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool contains_sorted(const std::vector<std::size_t>& v, std::size_t i) { return std::binary_search(v.begin(), v.end(), i); }

}  // namespace

Budget::Budget(ExplicitBudget b) : value_(std::move(b)) { sort_unique(std::get<ExplicitBudget>(value_).members); }

Budget::Budget(LinearBudget b) : value_(std::move(b)) {}

bool Budget::contains(const Bundle& x) const {
  if (const auto* e = std::get_if<ExplicitBudget>(&value_)) return x.index && contains_sorted(e->members, *x.index);
  const auto& lin = std::get<LinearBudget>(value_);
  if (x.point.size() != lin.prices.size()) return false;
  return dot(lin.prices, x.point) <= lin.income;
}

std::vector<std::size_t> Budget::members(const Universe& u) const {
  if (is_explicit()) return as_explicit().members;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (contains(u.bundle(i))) out.push_back(i);
  return out;
}

bool Observation::is_chosen(const Bundle& x) const { return x.index && contains_sorted(chosen, *x.index); }

DataSet::DataSet(Universe universe, std::vector<Observation> observations)
    : universe_(std::move(universe)), observations_(std::move(observations)) {
  const std::size_t n = universe_.size();
  for (std::size_t i = 0; i < observations_.size(); ++i) {
    auto& obs = observations_[i];
    const std::string where = "observation " + std::to_string(i) + ": ";
    if (obs.budget.is_explicit()) {
      const auto& members = obs.budget.as_explicit().members;
      if (members.empty()) throw InvalidData(where + "empty budget");
      if (members.back() >= n) throw InvalidData(where + "budget member outside the universe");
    } else {
      const auto& lin = obs.budget.as_linear();
      if (!universe_.is_vector()) throw InvalidData(where + "linear budget over a label universe");
      if (lin.prices.size() != universe_.dimension()) throw InvalidData(where + "price vector has wrong dimension");
      if (std::any_of(lin.prices.begin(), lin.prices.end(), [](const Rational& p) { return p < 0; }))
        throw InvalidData(where + "negative price");
      if (is_zero(lin.prices)) throw InvalidData(where + "price vector is zero");
      if (lin.income <= 0) throw InvalidData(where + "expenditure must be positive");
    }
    sort_unique(obs.chosen);
    if (obs.chosen.empty()) throw InvalidData(where + "empty chosen set");
    for (auto c : obs.chosen) {
      if (c >= n) throw InvalidData(where + "chosen alternative outside the universe");
      if (!obs.budget.contains(universe_.bundle(c)))
        throw InvalidData(where + "chosen alternative " + universe_.name(c) + " is not in its budget");
    }
  }
}

bool DataSet::all_explicit() const {
  return std::all_of(observations_.begin(), observations_.end(), [](const Observation& o) { return o.budget.is_explicit(); });
}

bool DataSet::all_linear() const {
  return std::all_of(observations_.begin(), observations_.end(), [](const Observation& o) { return o.budget.is_linear(); });
}

Relation revealed_relation(const DataSet& d) {
  Relation r = Relation::diagonal(d.universe().size());
  for (const auto& obs : d.observations()) {
    const auto members = obs.budget.members(d.universe());
    for (auto x : obs.chosen)
      for (auto y : members) r.insert(x, y);
  }
  return r;
}

namespace {

RegularityReport symbolic_regularity(const DataSet& d, const Theory& theory) {
  // Condition (a) holds for every linear budget: with p ≥ 0 and m > 0 the set of
  // parameters keeping f(x) affordable is downward closed in both theories.
  const auto& u = d.universe();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& lin = d[i].budget.as_linear();
    for (auto c : d[i].chosen) {
      const Rational spent = dot(lin.prices, u[c].point);
      RegularityReport bad;
      bad.regular = false;
      bad.condition = "chosen on the boundary";
      bad.observation = i;
      bad.point = u.bundle(c);
      bad.lower = theory.identity();
      if (theory.kind() == TheoryKind::Scaling) {
        if (spent == lin.income) continue;
        const Rational alpha = spent > 0 ? Rational(lin.income / spent) : Rational(2);
        bad.upper = Scaling{alpha};
        bad.detail = "scaling the chosen bundle by " + to_string(alpha) + " stays affordable";
      } else {
        const Rational p1 = lin.prices[0];
        if (p1 > 0 && spent == lin.income) continue;
        const Rational t = p1 > 0 ? Rational((lin.income - spent) / p1) : Rational(1);
        bad.upper = Translation{t};
        bad.detail = "adding " + to_string(t) + " of the numeraire stays affordable";
      }
      return bad;
    }
  }
  return {};
}

}  // namespace

RegularityReport is_regular(const DataSet& d, const Theory& theory) {
  if (!theory.ordered()) throw OrderMissing(theory.name() + " theory carries no order");
  const auto& u = d.universe();
  if (d.size() > 0) theory.check_compatible(u);
  if (theory.parametric()) {
    if (!d.all_linear()) {
      throw NotEnumerable("regularity over explicit budgets needs a finite grid for the " + theory.name() + " theory");
    }
    return symbolic_regularity(d, theory);
  }
  const auto& elements = theory.elements();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& obs = d[i];
    for (std::size_t x = 0; x < u.size(); ++x) {
      const Bundle bx = u.bundle(x);
      for (const auto& f : elements) {
        const Bundle fx = theory.apply(f, bx, u);
        if (obs.budget.contains(fx)) {
          for (const auto& g : elements) {
            if (theory.less_equal(g, f) && !obs.budget.contains(theory.apply(g, bx, u))) {
              return {false, "downward-closed budgets", i, bx, g, f,
                      "f(x) is in the budget but the smaller g(x) is not"};
            }
          }
        }
        if (obs.is_chosen(fx)) {
          for (const auto& g : elements) {
            if (!theory.less_equal(g, f) && obs.budget.contains(theory.apply(g, bx, u))) {
              return {false, "chosen on the boundary", i, bx, f, g, "f(x) is chosen but the larger g(x) is affordable"};
            }
          }
        }
      }
    }
  }
  return {};
}

}  // namespace aarp

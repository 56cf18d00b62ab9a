#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aarp/rational.hpp"
#include "aarp/relation.hpp"
#include "aarp/theory.hpp"
#include "aarp/universe.hpp"

namespace aarp {

/// A finite budget listed by universe index (sorted, unique).
struct ExplicitBudget {
  std::vector<std::size_t> members;
  friend bool operator==(const ExplicitBudget&, const ExplicitBudget&) = default;
};

/// {x : p·x ≤ m} with p ≥ 0, p ≠ 0, m > 0.
struct LinearBudget {
  Point prices;
  Rational income;
  friend bool operator==(const LinearBudget&, const LinearBudget&) = default;
};

class Budget {
 public:
  Budget(ExplicitBudget b);
  Budget(LinearBudget b);

  bool is_explicit() const { return std::holds_alternative<ExplicitBudget>(value_); }
  bool is_linear() const { return !is_explicit(); }
  const ExplicitBudget& as_explicit() const { return std::get<ExplicitBudget>(value_); }
  const LinearBudget& as_linear() const { return std::get<LinearBudget>(value_); }

  bool contains(const Bundle& x) const;
  /// Universe members of the budget, ascending.
  std::vector<std::size_t> members(const Universe& u) const;

  friend bool operator==(const Budget&, const Budget&) = default;

 private:
  std::variant<ExplicitBudget, LinearBudget> value_;
};

struct Observation {
  Budget budget;
  std::vector<std::size_t> chosen;  ///< sorted universe indices

  bool is_chosen(const Bundle& x) const;
  /// x ∈ B ∖ C(B)
  bool strictly_unchosen(const Bundle& x) const { return budget.contains(x) && !is_chosen(x); }
  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Budgets with their chosen sets over a shared universe.
class DataSet {
 public:
  DataSet() = default;
  /// Sorts/deduplicates index lists and validates every invariant; throws InvalidData.
  DataSet(Universe universe, std::vector<Observation> observations);

  const Universe& universe() const { return universe_; }
  const std::vector<Observation>& observations() const { return observations_; }
  std::size_t size() const { return observations_.size(); }
  const Observation& operator[](std::size_t i) const { return observations_.at(i); }

  bool all_explicit() const;
  bool all_linear() const;

  friend bool operator==(const DataSet&, const DataSet&) = default;

 private:
  Universe universe_;
  std::vector<Observation> observations_;
};

/// R_E: (x,y) when x is chosen from a budget containing y, plus the diagonal.
Relation revealed_relation(const DataSet& d);

/// Outcome of the regularity predicate.
struct RegularityReport {
  bool regular = true;
  std::string condition;  ///< "downward-closed budgets" or "chosen on the boundary"
  std::size_t observation = 0;
  std::optional<Bundle> point;
  std::optional<Transform> lower;  ///< f̄
  std::optional<Transform> upper;  ///< f
  std::string detail;
};

/// Readings used for the two regularity clauses, reported alongside verdicts.
inline constexpr const char* kRegularityReading =
    "(a) f(x) in B and g <= f imply g(x) in B; (b) f(x) in C(B) and g > f imply g(x) not in B";

/// Regularity under an ordered theory. Linear budgets with parametric
/// scaling/translation are decided symbolically; otherwise the theory must be
/// enumerable and x ranges over the universe.
RegularityReport is_regular(const DataSet& d, const Theory& theory);

}  // namespace aarp

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aarp/rational.hpp"

namespace aarp {

/// One element of the space of alternatives: an opaque label, a rational
/// vector, or both (a labelled vector).
struct Alternative {
  std::string label;
  Point point;

  bool has_label() const { return !label.empty(); }
  bool has_point() const { return !point.empty(); }
  friend bool operator==(const Alternative&, const Alternative&) = default;
};

/// An alternative that may or may not belong to the universe. Transformations
/// of vector alternatives routinely leave the universe; budgets and choice sets
/// are still decidable on such bundles (explicit budgets never contain them).
struct Bundle {
  std::optional<std::size_t> index;
  Point point;

  friend bool operator==(const Bundle& a, const Bundle& b) {
    if (a.index && b.index) return *a.index == *b.index;
    return a.index == b.index && a.point == b.point;
  }
};

std::string to_string(const Bundle& b);

/// Finite indexed set of alternatives. Either every alternative is a vector of
/// a common dimension, or none is.
class Universe {
 public:
  Universe() = default;
  explicit Universe(std::vector<Alternative> alternatives);

  static Universe from_labels(const std::vector<std::string>& labels);
  static Universe from_points(const std::vector<Point>& points);

  std::size_t size() const { return alternatives_.size(); }
  bool empty() const { return alternatives_.empty(); }
  const Alternative& operator[](std::size_t i) const { return alternatives_.at(i); }
  const std::vector<Alternative>& alternatives() const { return alternatives_; }

  bool is_vector() const { return dimension_ > 0; }
  std::size_t dimension() const { return dimension_; }

  std::optional<std::size_t> find_label(const std::string& label) const;
  std::optional<std::size_t> find_point(const Point& point) const;

  /// Bundle for a universe member.
  Bundle bundle(std::size_t i) const;
  /// Bundle for an arbitrary point; the index is set when the point is a member.
  Bundle bundle(const Point& point) const;

  /// Human-readable name of alternative i (label, else the vector).
  std::string name(std::size_t i) const;

  /// Appends an unlabelled vector alternative unless already present; returns its index.
  std::size_t add_point(Point point);

  friend bool operator==(const Universe& a, const Universe& b) { return a.alternatives_ == b.alternatives_; }

 private:
  void index_alternative(std::size_t i);

  std::vector<Alternative> alternatives_;
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, std::size_t> by_label_;
  std::map<Point, std::size_t> by_point_;
};

}  // namespace aarp

#include "aarp/universe.hpp"

#include "aarp/errors.hpp"

namespace aarp {

std::string to_string(const Bundle& b) {
  if (b.index && b.point.empty()) return "#" + std::to_string(*b.index);
  std::string out = to_string(b.point);
  if (b.index) out += "#" + std::to_string(*b.index);
  return out;
}

Universe::Universe(std::vector<Alternative> alternatives) : alternatives_(std::move(alternatives)) {
  for (std::size_t i = 0; i < alternatives_.size(); ++i) {
    for (auto& v : alternatives_[i].point) v.canonicalize();
    const auto& alt = alternatives_[i];
    if (!alt.has_label() && !alt.has_point()) {
      throw InvalidData("alternative " + std::to_string(i) + " has neither a label nor a point");
    }
    if (i == 0) {
      dimension_ = alt.point.size();
    } else if (alt.point.size() != dimension_) {
      throw InvalidData("alternative " + std::to_string(i) + " has dimension " + std::to_string(alt.point.size()) +
                        ", expected " + std::to_string(dimension_));
    }
    index_alternative(i);
  }
}

void Universe::index_alternative(std::size_t i) {
  const auto& alt = alternatives_[i];
  if (alt.has_label() && !by_label_.emplace(alt.label, i).second) {
    throw InvalidData("duplicate label \"" + alt.label + "\"");
  }
  if (alt.has_point() && !by_point_.emplace(alt.point, i).second) {
    throw InvalidData("duplicate point " + to_string(alt.point));
  }
}

Universe Universe::from_labels(const std::vector<std::string>& labels) {
  std::vector<Alternative> alts;
  alts.reserve(labels.size());
  for (const auto& l : labels) alts.push_back({l, {}});
  return Universe(std::move(alts));
}

Universe Universe::from_points(const std::vector<Point>& points) {
  std::vector<Alternative> alts;
  alts.reserve(points.size());
  for (const auto& p : points) alts.push_back({{}, p});
  return Universe(std::move(alts));
}

std::optional<std::size_t> Universe::find_label(const std::string& label) const {
  if (auto it = by_label_.find(label); it != by_label_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Universe::find_point(const Point& point) const {
  if (auto it = by_point_.find(point); it != by_point_.end()) return it->second;
  return std::nullopt;
}

Bundle Universe::bundle(std::size_t i) const { return Bundle{i, alternatives_.at(i).point}; }

Bundle Universe::bundle(const Point& point) const { return Bundle{find_point(point), point}; }

std::string Universe::name(std::size_t i) const {
  const auto& alt = alternatives_.at(i);
  return alt.has_label() ? alt.label : to_string(alt.point);
}

std::size_t Universe::add_point(Point point) {
  for (auto& v : point) v.canonicalize();
  if (!is_vector() && !empty()) throw InvalidData("cannot add a point to a label universe");
  if (auto found = find_point(point)) return *found;
  if (!empty() && point.size() != dimension_) throw InvalidData("dimension mismatch in add_point");
  alternatives_.push_back({{}, point});
  dimension_ = point.size();
  index_alternative(alternatives_.size() - 1);
  return alternatives_.size() - 1;
}

}  // namespace aarp

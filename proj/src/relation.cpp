#include "aarp/relation.hpp"

#include "aarp/errors.hpp"

namespace aarp {

Relation::Relation(std::size_t n, const std::vector<Pair>& pairs) : Relation(n) {
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) throw InvalidData("relation pair outside the universe");
    insert(x, y);
  }
}

Relation Relation::diagonal(std::size_t n) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

Relation Relation::full(std::size_t n) {
  Relation r(n);
  r.bits_.assign(n * n, true);
  return r;
}

std::size_t Relation::count() const {
  std::size_t c = 0;
  for (bool b : bits_) c += b;
  return c;
}

std::vector<Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

bool Relation::is_reflexive() const {
  for (std::size_t i = 0; i < n_; ++i)
    if (!contains(i, i)) return false;
  return true;
}

bool Relation::is_complete() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = x; y < n_; ++y)
      if (!contains(x, y) && !contains(y, x)) return false;
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y) {
      if (!contains(x, y)) continue;
      for (std::size_t z = 0; z < n_; ++z)
        if (contains(y, z) && !contains(x, z)) return false;
    }
  return true;
}

bool Relation::subset_of(const Relation& other) const {
  if (n_ != other.n_) throw UniverseMismatch("relations over universes of different size");
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] && !other.bits_[k]) return false;
  return true;
}

Relation Relation::inverse() const {
  Relation out(n_);
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (contains(x, y)) out.insert(y, x);
  return out;
}

Relation& Relation::operator|=(const Relation& other) {
  if (n_ != other.n_) throw UniverseMismatch("relations over universes of different size");
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (other.bits_[k]) bits_[k] = true;
  return *this;
}

Relation strict_part(const Relation& r) {
  Relation out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (r.contains(x, y) && !r.contains(y, x)) out.insert(x, y);
  return out;
}

Relation noncomparable(const Relation& r) {
  Relation out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (!r.contains(x, y) && !r.contains(y, x)) out.insert(x, y);
  return out;
}

Relation transitive_closure(const Relation& r) {
  Relation out = r;
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.contains(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (out.contains(k, j)) out.insert(i, j);
    }
  return out;
}

std::optional<Pair> extension_violation(const Relation& r, const Relation& r2) {
  if (r.size() != r2.size()) throw UniverseMismatch("relations over universes of different size");
  // P⁻¹(R) ∩ R2: (x,y) with (y,x) strict in R and (x,y) in R2.
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = 0; y < r.size(); ++y)
      if (r2.contains(x, y) && r.contains(y, x) && !r.contains(x, y)) return Pair{x, y};
  return std::nullopt;
}

bool is_extension(const Relation& r, const Relation& r2) {
  return r.subset_of(r2) && !extension_violation(r, r2);
}

}  // namespace aarp

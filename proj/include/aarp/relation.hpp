#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace aarp {

using Pair = std::pair<std::size_t, std::size_t>;

/// Binary relation on the index set {0, ..., n-1} of a universe, stored as a
/// dense n x n bit matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}
  Relation(std::size_t n, const std::vector<Pair>& pairs);

  static Relation diagonal(std::size_t n);
  static Relation full(std::size_t n);

  std::size_t size() const { return n_; }
  bool contains(std::size_t x, std::size_t y) const { return bits_[x * n_ + y]; }
  bool contains(const Pair& p) const { return contains(p.first, p.second); }
  void insert(std::size_t x, std::size_t y) { bits_.at(x * n_ + y) = true; }
  void erase(std::size_t x, std::size_t y) { bits_.at(x * n_ + y) = false; }

  std::size_t count() const;
  std::vector<Pair> pairs() const;

  bool is_reflexive() const;
  bool is_complete() const;
  bool is_transitive() const;
  bool subset_of(const Relation& other) const;

  Relation inverse() const;
  Relation& operator|=(const Relation& other);

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

/// P(R): pairs of R whose reverse is not in R.
Relation strict_part(const Relation& r);

/// N(R): pairs comparable in neither direction.
Relation noncomparable(const Relation& r);

/// Smallest transitive superset (Warshall).
Relation transitive_closure(const Relation& r);

/// R ⪯ R2: R ⊆ R2 and every strict pair of R stays strict in R2. Decided by
/// the criterion P⁻¹(R) ∩ R2 = ∅. Throws UniverseMismatch on size mismatch.
bool is_extension(const Relation& r, const Relation& r2);

/// First pair of P⁻¹(R) ∩ R2 in (row, column) order, if any.
std::optional<Pair> extension_violation(const Relation& r, const Relation& r2);

}  // namespace aarp

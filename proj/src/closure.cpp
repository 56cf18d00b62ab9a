#include "aarp/closure.hpp"

#include "aarp/errors.hpp"

namespace aarp {

namespace {

void check_size(const Relation& r, const Universe& u) {
  if (r.size() != u.size()) throw UniverseMismatch("relation size does not match the universe");
}

// Image table img[f][i], with OrbitEscape when an image leaves the universe.
std::vector<std::vector<std::size_t>> image_table(const Theory& theory, const Universe& u) {
  const auto& elements = theory.elements();
  std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(u.size()));
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (std::size_t i = 0; i < u.size(); ++i) {
      auto img = theory.image(elements[k], i, u);
      if (!img) throw OrbitEscape(to_string(elements[k]) + " maps " + u.name(i) + " outside the universe");
      table[k][i] = *img;
    }
  return table;
}

}  // namespace

Relation theory_closure(const Relation& r, const Theory& theory, const Universe& u) {
  check_size(r, u);
  theory.check_compatible(u);
  const std::size_t n = u.size();
  Relation out(n);
  if (theory.enumerable()) {
    const auto table = image_table(theory, u);
    for (const auto& img : table)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (r.contains(img[x], img[y])) out.insert(x, y);
    return out;
  }
  const auto pairs = r.pairs();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [a, b] : pairs)
        if (theory.maps_pair(u, u.bundle(x), u.bundle(y), u.bundle(a), u.bundle(b))) {
          out.insert(x, y);
          break;
        }
  return out;
}

Relation ordered_theory_closure(const Relation& r, const Theory& theory, const Universe& u) {
  check_size(r, u);
  if (!theory.ordered()) throw OrderMissing(theory.name() + " theory carries no order");
  theory.check_compatible(u);
  const std::size_t n = u.size();
  Relation out(n);
  if (theory.enumerable()) {
    const auto& elements = theory.elements();
    const auto table = image_table(theory, u);
    for (std::size_t lo = 0; lo < elements.size(); ++lo)
      for (std::size_t hi = 0; hi < elements.size(); ++hi) {
        if (!theory.less_equal(elements[lo], elements[hi])) continue;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (r.contains(table[lo][x], table[hi][y])) out.insert(x, y);
      }
    return out;
  }
  const auto pairs = r.pairs();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& [a, b] : pairs)
        if (theory.maps_pair_ordered(u, u.bundle(x), u.bundle(y), u.bundle(a), u.bundle(b))) {
          out.insert(x, y);
          break;
        }
  return out;
}

Closure::Closure(Kind kind, const Theory& theory, const Universe& u) : kind_(kind), theory_(&theory), universe_(&u) {
  if (kind == Kind::TransitiveOrderedTheory && !theory.ordered()) {
    throw OrderMissing(theory.name() + " theory carries no order");
  }
}

Relation Closure::operator()(const Relation& r) const {
  switch (kind_) {
    case Kind::Theory: return theory_closure(r, *theory_, *universe_);
    case Kind::TransitiveTheory: return transitive_closure(theory_closure(r, *theory_, *universe_));
    case Kind::TransitiveOrderedTheory:
      return transitive_closure(ordered_theory_closure(r, *theory_, *universe_));
  }
  return r;
}

Relation extend_to_complete(const Relation& r, const Closure& close) {
  Relation current = close(r);
  if (auto bad = extension_violation(r, current)) {
    throw PreconditionFailure("relation is not extended by its closure: pair (" + std::to_string(bad->first) + ", " +
                              std::to_string(bad->second) + ") reverses a strict comparison");
  }
  const std::size_t n = r.size();
  for (;;) {
    std::optional<Pair> next;
    for (std::size_t x = 0; x < n && !next; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!current.contains(x, y) && !current.contains(y, x)) {
          next = Pair{x, y};
          break;
        }
    if (!next) {
      if (auto lost = extension_violation(r, current)) {
        throw PreconditionFailure("completion reversed the strict pair (" + std::to_string(lost->second) + ", " +
                                  std::to_string(lost->first) + "); the closure is not weakly expansive here");
      }
      return current;
    }
    current.insert(next->first, next->second);
    current = close(current);
  }
}

}  // namespace aarp

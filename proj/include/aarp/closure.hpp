#pragma once

#include <optional>

#include "aarp/relation.hpp"
#include "aarp/theory.hpp"
#include "aarp/universe.hpp"

namespace aarp {

/// F(R) = {(x,y) : ∃ f, (f(x), f(y)) ∈ R}.
///
/// Enumerable theories must map the universe into itself (see orbit_carrier);
/// otherwise OrbitEscape is thrown. Parametric scaling/translation theories
/// are decided symbolically over the whole group.
Relation theory_closure(const Relation& r, const Theory& theory, const Universe& u);

/// F̄(R) = {(x,y) : ∃ f̄ ≤ f, (f̄(x), f(y)) ∈ R}. Throws OrderMissing for
/// unordered theories.
Relation ordered_theory_closure(const Relation& r, const Theory& theory, const Universe& u);

/// The closure operators used for completion.
class Closure {
 public:
  enum class Kind {
    Theory,                  ///< F
    TransitiveTheory,        ///< T ∘ F
    TransitiveOrderedTheory  ///< T ∘ F̄
  };

  Closure(Kind kind, const Theory& theory, const Universe& u);

  Kind kind() const { return kind_; }
  Relation operator()(const Relation& r) const;

 private:
  Kind kind_;
  const Theory* theory_;
  const Universe* universe_;
};

/// Grows R to a complete fixed point R* of `close` with R ⪯ R*: close, then
/// repeatedly add the smallest non-comparable pair (row-major) and close again.
/// Throws PreconditionFailure when R ⋠ close(R), naming the offending pair.
Relation extend_to_complete(const Relation& r, const Closure& close);

}  // namespace aarp

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aarp/theory.hpp"
#include "aarp/universe.hpp"

namespace aarp {

/// Replayable certificate of an axiom violation: observations i₁..iₙ with chosen
/// x₁..xₙ and transformations f₁..fₙ₋₁ such that fⱼ(xⱼ₊₁) ∈ B_{iⱼ}, and the
/// landing (f₁∘…∘fₙ₋₁)⁻¹(x₁) ∈ B_{iₙ} ∖ C(B_{iₙ}).
struct Witness {
  std::vector<std::size_t> observations;
  std::vector<Bundle> chosen;
  std::vector<Transform> transforms;
  Bundle landing;
  /// Closed-cycle edge weights (maximal alphas for HARP, maximal shifts for
  /// QARP; nullopt for an unbounded edge); empty for other axioms.
  std::vector<std::optional<Rational>> cycle_weights;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  std::string axiom;
  bool pass = true;
  std::optional<Witness> witness;
  /// False when a bounded search stopped early; a pass is then conservative.
  bool exhaustive = true;
  /// Behavioral certificates on pass: the consideration sets Γ(B) (S-SAARP) or
  /// the retained sets B↓ (GE-SAARP), as universe indices per observation.
  std::optional<std::vector<std::vector<std::size_t>>> selection;
  std::vector<std::string> notes;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace aarp

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aarp/axioms.hpp"
#include "aarp/data.hpp"
#include "aarp/relation.hpp"
#include "aarp/theory.hpp"
#include "aarp/verdict.hpp"

namespace aarp {

struct BehavioralLimits {
  /// Upper bound on the number of candidate selections (product over observations).
  std::uint64_t max_candidates = std::uint64_t{1} << 20;
  SearchLimits saarp;
};

/// Union of the top k argmax layers of `budget` under R. Throws InvalidData
/// if R is not a total preorder on the budget or k == 0.
std::vector<std::size_t> k_max_set(const Relation& r, const std::vector<std::size_t>& budget, std::size_t k);

/// Sequential choice: some Γ with C(B) ⊆ Γ(B) ⊆ B such that (B, Γ) satisfies
/// WAARP under g1 and (Γ, C) is regular and satisfies SAARP under g2.
/// Explicit budgets only; the data set itself must be regular under g2.
Verdict check_s_saarp(const DataSet& d, const Theory& g1, const Theory& g2, const BehavioralLimits& limits = {});

/// Good-enough choice: some retained sets B↓ ⊆ B ∖ C(B) with |B ∖ B↓| ≤ k whose
/// truncated data set is regular and satisfies SAARP under g.
Verdict check_ge_saarp(const DataSet& d, const Theory& g, std::size_t k, const BehavioralLimits& limits = {});

/// The truncated data set generated by retained sets B↓: per observation the
/// budget B↓ ∪ C(B) with the original choice, then B↓ ∪ {y} choosing y for each
/// remaining y in ascending order. Throws InvalidData on a bad selection.
DataSet build_truncated_dataset(const DataSet& d, const std::vector<std::vector<std::size_t>>& retained,
                                std::optional<std::size_t> k = std::nullopt);

}  // namespace aarp

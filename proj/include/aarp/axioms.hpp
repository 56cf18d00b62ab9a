#pragma once

#include <cstddef>
#include <vector>

#include "aarp/data.hpp"
#include "aarp/theory.hpp"
#include "aarp/verdict.hpp"

namespace aarp {

struct SearchLimits {
  /// Product-graph states explored per start before the search gives up.
  std::size_t max_states = 200000;
};

/// Weak algebraic axiom: no chosen xᵢ, xⱼ and f with f(xᵢ) ∈ Bⱼ and
/// f⁻¹(xⱼ) ∈ Bᵢ ∖ C(Bᵢ). Enumerable theories are checked element by element;
/// parametric scaling/translation are decided exactly per pair.
Verdict check_waarp(const DataSet& d, const Theory& theory);

/// Strong algebraic axiom by breadth-first search over (observation,
/// accumulated element) states. Needs an enumerable theory; when the element
/// list is not a group the accumulated products are bounded by `limits` and a
/// pass may be non-exhaustive.
Verdict check_saarp_generic(const DataSet& d, const Theory& theory, const SearchLimits& limits = {});

/// Classical strong axiom via strongly connected components.
Verdict check_sarp(const DataSet& d);

/// Homothetic axiom on linear budgets: maximal-product cycles over exact rationals.
Verdict check_harp(const DataSet& d);

/// Quasilinear axiom on linear budgets: maximal-sum cycles over exact rationals.
Verdict check_qarp(const DataSet& d);

/// Independence axiom over a finite list of affine maps closed under inverse.
/// A violation is sound; a pass only covers compositions of the listed maps.
Verdict check_iarp(const DataSet& d, const std::vector<AffineMap>& elements, const SearchLimits& limits = {});

}  // namespace aarp

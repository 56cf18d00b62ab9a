#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aarp/data.hpp"
#include "aarp/rational.hpp"
#include "aarp/relation.hpp"
#include "aarp/theory.hpp"
#include "aarp/verdict.hpp"

namespace aarp {

// Brute-force ground truth for tiny instances. Nothing here calls the
// checkers or closure operators.

struct OracleFlags {
  bool require_transitive = false;
  bool require_complete = false;
  /// Consistency with the order-extended theory: (x,y) ∈ R and g ≥ f imply (g(x), f(y)) ∈ R.
  bool ordered_consistency = false;
  /// Unchosen budget members must be strictly below every chosen one (R_E ⪯ R).
  /// Off gives the bare maximal-point reading, which differs for intransitive R.
  bool strict_rejection = true;
};

struct OracleResult {
  bool rationalizable = false;
  std::optional<Relation> certificate;
  std::vector<std::string> notes;
};

inline constexpr std::size_t kOracleDefaultCap = 4;

/// Enumerates reflexive relations by off-diagonal bitmask (row-major pairs,
/// ascending) and returns the first one that is consistent with the theory,
/// meets the flags, and has C(B) = max(B, R) on every budget. Explicit budgets
/// and enumerable theories only; the universe may hold at most `cap` ≤ 5
/// alternatives (5 adds a warning note), else CapExceeded.
OracleResult brute_force_rationalizable(const DataSet& d, const Theory& theory, const OracleFlags& flags = {},
                                        std::size_t cap = kOracleDefaultCap);

/// max(B, R): x with (x,y) ∈ R for all y ∈ B and no y ∈ B strictly above x.
std::vector<std::size_t> maximal_points(const Relation& r, const std::vector<std::size_t>& budget);

/// chosen == max(B, R)
bool check_maximality(const Relation& r, const std::vector<std::size_t>& budget, std::vector<std::size_t> chosen);

/// check_maximality, plus (when `strict`) every unchosen member strictly below every chosen one.
bool generates_choice(const Relation& r, const std::vector<std::size_t>& budget, const std::vector<std::size_t>& chosen,
                      bool strict);

struct OracleWeight {
  bool present = true;
  bool infinite = false;
  Rational value;
};

enum class CycleMode { Product, Sum };

struct SimpleCycle {
  std::vector<std::size_t> nodes;  ///< smallest node first; closing edge back to the front
  bool unbounded = false;          ///< some edge is infinite
  Rational aggregate;              ///< product or sum of the edge weights (finite case)
};

/// Every simple cycle (self-loops included) of a graph with at most 8 nodes.
std::vector<SimpleCycle> enumerate_simple_cycles(const std::vector<std::vector<OracleWeight>>& weights, CycleMode mode);

/// HARP / QARP violation by simple-cycle enumeration with exact boundary
/// landings checked at every rotation. Linear budgets only.
bool harp_violation_oracle(const DataSet& d);
bool qarp_violation_oracle(const DataSet& d);

/// Two-stage maximization: R1 complete and consistent with g1, R2 complete,
/// transitive and order-consistent with g2, Γ(B) = max(B, R1), C(B) = max(Γ(B), R2).
OracleResult sequential_oracle(const DataSet& d, const Theory& g1, const Theory& g2,
                               std::size_t cap = kOracleDefaultCap);

/// Good-enough choice: a complete, transitive, consistent R under which the
/// chosen points of each budget are mutually indifferent and at most k budget
/// members are weakly above them.
OracleResult good_enough_oracle(const DataSet& d, const Theory& g, std::size_t k, std::size_t cap = kOracleDefaultCap);

struct ReplayResult {
  bool ok = false;
  std::string reason;
};

/// Re-derives a violation from its witness with membership tests and direct
/// application of the transformations.
ReplayResult replay_witness(const DataSet& d, const Witness& w);

struct AuditResult {
  bool ok() const { return failures.empty(); }
  std::vector<std::string> failures;
};

/// Checks a rationalizing relation: completeness, transitivity, consistency
/// with the theory's elements (pairs whose images leave the universe are
/// skipped), extension of R_E, and C(B) = max(B, R) on explicit budgets.
AuditResult audit_certificate(const Relation& r, const DataSet& d, const Theory& theory, bool require_transitive = true,
                              bool require_complete = true);

}  // namespace aarp

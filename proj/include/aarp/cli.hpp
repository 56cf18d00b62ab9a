#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "aarp/axioms.hpp"
#include "aarp/behavioral.hpp"
#include "aarp/json_io.hpp"
#include "aarp/oracle.hpp"

namespace aarp {

/// Theory spec strings:
///   trivial
///   permutation:1,0,2;0,2,1      generators as image lists
///   scaling | scaling:1/2,1,2    optional finite grid
///   translation | translation:-1,0,1
///   affine:2@0,0;1/2@1,1         mixing maps alpha@z, or alpha+offset
/// Throws ParseError (path "theory") on malformed specs.
Theory parse_theory(const std::string& spec);
/// The element list of an affine spec (IARP needs the maps themselves).
std::vector<AffineMap> parse_affine_elements(const std::string& spec);

struct CheckOptions {
  std::string axiom = "saarp";
  std::string theory = "trivial";
  std::string theory2 = "trivial";
  std::size_t k = 2;
  std::size_t max_states = SearchLimits{}.max_states;
  std::size_t max_candidates = BehavioralLimits{}.max_candidates;
};

/// Each runner returns a report document with "axiom", "outcome"
/// ("pass" | "violation") and subcommand-specific fields.
Json run_check(const DataSet& d, const CheckOptions& options);
/// closure: "theory" (F), "transitive" (T∘F) or "ordered" (T∘F̄).
Json run_complete(const DataSet& d, const std::string& theory, const std::string& closure);
Json run_oracle(const DataSet& d, const std::string& theory, const OracleFlags& flags, std::size_t cap);
/// Group laws on sampled elements and closure laws on R_E plus random relations.
Json run_laws(const DataSet& d, const std::string& theory, std::size_t samples, std::uint64_t seed);

/// 0 pass, 1 violation.
int exit_code(const Json& report);

/// Entry point of the `aarp` tool. Exit 0 pass, 1 violation, 2 usage, parse,
/// data or cap errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aarp

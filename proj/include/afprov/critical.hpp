#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/grounded.hpp"
#include "afprov/stable.hpp"

namespace afprov {

enum class Minimality { Cardinality, Subset };

std::string_view to_string(Minimality m) noexcept;
std::optional<Minimality> parse_minimality(std::string_view text) noexcept;

enum class CandidatePolicy {
  UndecidedPairs,  // attacker and target both undecided in the grounded solution
  Widened,         // at least one endpoint undecided
};

inline constexpr std::size_t kDefaultCandidateBudget = 24;

struct CriticalSearchOptions {
  Minimality minimality = Minimality::Cardinality;
  CandidatePolicy candidates = CandidatePolicy::UndecidedPairs;
  /// More candidates than this raises Error(BudgetExceeded). Capped at 63.
  std::size_t max_candidates = kDefaultCandidateBudget;
};

struct CriticalAttackSet {
  std::size_t stable_index = 0;
  std::size_t delta_index = 0;  // 1-based, assigned after sorting
  std::vector<AttackEdge> edges;  // sorted
  Minimality minimality = Minimality::Cardinality;

  friend bool operator==(const CriticalAttackSet&,
                         const CriticalAttackSet&) = default;
};

std::vector<AttackEdge> candidate_edges(
    const GroundedSolution& grounded,
    CandidatePolicy policy = CandidatePolicy::UndecidedPairs);

/// True iff the grounded solution of (V, E minus delta) is 2-valued with IN
/// set equal to the stable extension. Throws Error(InvalidDelta) when delta
/// is not a subset of E.
bool validate_delta(const ArgumentationFramework& af,
                    const StableSolution& stable,
                    std::span<const AttackEdge> delta);

/// Ascending-size subset search over the candidate edges.
/// Cardinality: every valid set of the first size that has one.
/// Subset: every inclusion-minimal valid set (supersets of found sets are
/// skipped). Results are sorted lexicographically and indexed from 1.
/// Throws Error(NoCriticalSetFound) or Error(BudgetExceeded).
std::vector<CriticalAttackSet> find_critical_sets(
    const GroundedSolution& grounded, const StableSolution& stable,
    const CriticalSearchOptions& options = {});

/// Clingo program for the cardinality-minimal critical sets of `stable`,
/// followed by the AF as attacks/2 facts and constraints pinning the
/// target labeling.
std::string emit_asp_program(const ArgumentationFramework& af,
                             const ExtensionSet& stable);

}  // namespace afprov

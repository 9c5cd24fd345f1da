#pragma once

// Brute-force reference implementations. They are built only on the set
// semantics in semantics.hpp and never call the stage-based engines, so they
// can arbitrate between an engine and its specification.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/critical.hpp"
#include "afprov/semantics.hpp"

namespace afprov::oracle {

/// Grounded labeling via the least fixpoint of F: IN = grounded extension,
/// OUT = attacked by it, UNDEC otherwise.
Labeling grounded_labeling(const ArgumentationFramework& af);

/// Attacks whose endpoints are both undecided in grounded_labeling(af).
std::vector<AttackEdge> undecided_attacks(const ArgumentationFramework& af);

/// True iff removing delta yields a 2-valued grounded labeling whose IN set
/// is `target`.
bool delta_yields(const ArgumentationFramework& af, const ExtensionSet& target,
                  std::span<const AttackEdge> delta);

/// All 2^|candidates| subsets filtered by delta_yields, then minimized.
/// Each set sorted; the family sorted lexicographically.
std::vector<std::vector<AttackEdge>> critical_sets_bruteforce(
    const ArgumentationFramework& af, const ExtensionSet& target,
    std::span<const AttackEdge> candidates, Minimality minimality);

struct RandomAfParams {
  std::size_t min_args = 2;
  std::size_t max_args = 10;
  double min_density = 0.1;
  double max_density = 0.5;
  bool self_loops = true;
};

/// Draws |V| and a density uniformly, then each ordered pair independently.
/// Uses raw engine output only, so a seed gives the same AF on every platform.
ArgumentationFramework random_af(std::mt19937_64& rng, const RandomAfParams& params = {});

inline constexpr std::uint64_t kSuiteSeed = 20240601;
inline constexpr std::size_t kSuiteSize = 500;

/// `count` frameworks drawn from one engine seeded with `seed`.
std::vector<ArgumentationFramework> random_suite(std::uint64_t seed = kSuiteSeed,
                                                 std::size_t count = kSuiteSize,
                                                 const RandomAfParams& params = {});

struct CrossCheckReport {
  std::size_t critical_checked = 0;  // stable solutions whose critical sets were compared
  std::size_t critical_skipped = 0;  // too many candidates for the oracle
  std::vector<std::string> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares grounded, stable and critical-set engines against the oracles.
CrossCheckReport cross_check(const ArgumentationFramework& af,
                             std::size_t max_oracle_candidates = 12);

}  // namespace afprov::oracle

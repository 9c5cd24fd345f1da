#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/semantics.hpp"

namespace afprov {

/// Solved game over an AF: 3-valued labeling, lengths and attack types.
/// All per-argument and per-edge vectors are aligned with the AF's indices.
class GroundedSolution {
 public:
  GroundedSolution() = default;
  /// Validates alignment and the label/length invariants
  /// (throws Error(InvariantViolation)).
  GroundedSolution(ArgumentationFramework af, Labeling labeling,
                   std::vector<Length> lengths,
                   std::vector<EdgeType> edge_types);

  const ArgumentationFramework& af() const noexcept { return af_; }
  const Labeling& labeling() const noexcept { return labeling_; }
  std::span<const Length> lengths() const noexcept { return lengths_; }
  std::span<const EdgeType> edge_types() const noexcept { return edge_types_; }

  Label label(ArgIndex i) const { return labeling_[i]; }
  Label label(const ArgumentId& id) const { return labeling_[af_.index_of(id)]; }
  Length length(ArgIndex i) const { return lengths_.at(i); }
  Length length(const ArgumentId& id) const {
    return lengths_.at(af_.index_of(id));
  }
  EdgeType edge_type(EdgeIndex e) const { return edge_types_.at(e); }
  /// Throws Error(UnknownArgument) when the edge is not in the AF.
  EdgeType edge_type(const AttackEdge& edge) const;

  ExtensionSet in_set() const;

  friend bool operator==(const GroundedSolution&,
                         const GroundedSolution&) = default;

 private:
  ArgumentationFramework af_;
  Labeling labeling_;
  std::vector<Length> lengths_;
  std::vector<EdgeType> edge_types_;
};

/// Stage-wise R-forall / R-exists rounds from the all-unlabeled state.
/// Even stages accept arguments whose attackers are all OUT, odd stages
/// defeat arguments with an IN attacker; the stage number is the length.
GroundedSolution solve_grounded(const ArgumentationFramework& af);

/// Fig. 3 attack-type table. Throws Error(InvariantViolation) on a
/// combination that no grounded labeling can produce.
std::vector<EdgeType> classify_edges(const ArgumentationFramework& af,
                                     const Labeling& labeling,
                                     std::span<const Length> lengths);

/// Recomputes every finite length from its neighbours:
///   OUT: 1 + min over IN attackers;  IN: 0 or 1 + max over attackers.
/// Throws Error(InvariantViolation) on any disagreement or parity error.
void check_length_recurrences(const ArgumentationFramework& af,
                              const Labeling& labeling,
                              std::span<const Length> lengths);

struct ProvenanceSubgraph {
  ArgumentId root;
  std::vector<ArgumentId> nodes;                       // sorted
  std::vector<std::pair<AttackEdge, EdgeType>> edges;  // sorted by edge

  friend bool operator==(const ProvenanceSubgraph&,
                         const ProvenanceSubgraph&) = default;
};

/// Walks from x against the attack direction over every non-blunder edge.
ProvenanceSubgraph actual_provenance(const GroundedSolution& sol,
                                     const ArgumentId& x);
/// As actual_provenance, additionally skipping secondary successful attacks.
ProvenanceSubgraph primary_provenance(const GroundedSolution& sol,
                                      const ArgumentId& x);

namespace detail {

struct StageResult {
  Labeling labeling;
  std::vector<Length> lengths;
};

/// The stage iteration restricted to edges with active[e] set
/// (all edges when `active` is empty).
StageResult run_stages(const ArgumentationFramework& af,
                       std::span<const std::uint8_t> active);

}  // namespace detail

}  // namespace afprov

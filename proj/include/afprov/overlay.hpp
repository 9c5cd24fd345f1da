#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/critical.hpp"
#include "afprov/grounded.hpp"
#include "afprov/stable.hpp"

namespace afprov {

enum class EffectiveLabel : std::uint8_t { In, Out, InPrimed, OutPrimed };

std::string_view to_string(EffectiveLabel label) noexcept;
std::optional<EffectiveLabel> parse_effective_label(std::string_view text) noexcept;
bool is_primed(EffectiveLabel label) noexcept;
bool is_accepted(EffectiveLabel label) noexcept;

struct OverlayNodeLabel {
  Label base = Label::Undec;
  EffectiveLabel effective = EffectiveLabel::In;
  Length base_length;
  Length effective_length;
  bool length_changed = false;

  friend bool operator==(const OverlayNodeLabel&, const OverlayNodeLabel&) = default;
};

/// Grounded solution of (V, E minus delta) drawn over the original AF.
struct ProvenanceOverlay {
  ArgumentationFramework af;
  GroundedSolution grounded;  // of af itself, before removing delta
  std::size_t stable_index = 0;
  CriticalAttackSet delta;
  std::vector<OverlayNodeLabel> node_labels;  // by argument index
  std::vector<EdgeType> edge_types;           // by edge index of af

  const OverlayNodeLabel& node(const ArgumentId& id) const {
    return node_labels.at(af.index_of(id));
  }
  /// Throws Error(UnknownArgument) for an attack outside af.
  EdgeType edge_type(const AttackEdge& edge) const;
  /// Display convention: an edge is primed iff an endpoint was undecided.
  bool is_primed_edge(EdgeIndex e) const;

  friend bool operator==(const ProvenanceOverlay&, const ProvenanceOverlay&) = default;
};

/// Throws Error(InvalidDelta) unless delta validates against `stable`.
ProvenanceOverlay build_overlay(const GroundedSolution& grounded,
                                const StableSolution& stable,
                                const CriticalAttackSet& delta);

/// IN for accepted arguments, OUT otherwise; never UNDEC.
Labeling effective_labeling(const ProvenanceOverlay& overlay);

/// The modified framework (V, E minus delta) the overlay was computed from.
ArgumentationFramework modified_af(const ProvenanceOverlay& overlay);
/// Every edge of the overlay, CRITICAL included, as a framework; equals af.
ArgumentationFramework reconstruct_af(const ProvenanceOverlay& overlay);

}  // namespace afprov

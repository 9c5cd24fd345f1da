#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/grounded.hpp"
#include "afprov/overlay.hpp"

namespace afprov {

struct LayoutPosition {
  std::optional<std::uint32_t> layer;  // nullopt: undecided band
  std::uint32_t slot = 0;

  friend bool operator==(const LayoutPosition&, const LayoutPosition&) = default;
};

/// Layer = length, layer 0 at the bottom; undecided arguments sit in a band
/// outside the layering. Slots are 0..n-1 within each layer and the band.
struct LayeredLayout {
  std::map<std::uint32_t, std::vector<ArgumentId>> layers;
  std::vector<ArgumentId> undec_band;
  std::map<ArgumentId, LayoutPosition> positions;

  friend bool operator==(const LayeredLayout&, const LayeredLayout&) = default;
};

/// Slot order: barycenter of non-blunder neighbours in adjacent-direction
/// layers, one upward then one downward sweep, ties by ArgumentId.
LayeredLayout layout_grounded(const GroundedSolution& sol);
LayeredLayout layout_overlay(const ProvenanceOverlay& overlay);

}  // namespace afprov

#pragma once

#include <string>
#include <string_view>

#include "afprov/grounded.hpp"
#include "afprov/layout.hpp"
#include "afprov/overlay.hpp"

namespace afprov {

namespace palette {
inline constexpr std::string_view kBlue = "#4A90D9";
inline constexpr std::string_view kOrange = "#F5A623";
inline constexpr std::string_view kYellow = "#F8E71C";
// Same hue and value at 40% HSV saturation.
inline constexpr std::string_view kPaleBlue = "#82ADD9";
inline constexpr std::string_view kPaleOrange = "#F5D093";
inline constexpr std::string_view kRed = "#D0021B";
inline constexpr std::string_view kGray = "#9B9B9B";
inline constexpr std::string_view kBlack = "#000000";
}  // namespace palette

/// Graphviz digraph with one rank group per layer (layer 0 at the bottom)
/// and the undecided band as the topmost group.
/// Throws Error(LayoutMismatch) when the layout does not fit the subject.
std::string export_dot(const GroundedSolution& sol, const LayeredLayout& layout);
std::string export_dot(const ProvenanceOverlay& overlay, const LayeredLayout& layout);

}  // namespace afprov

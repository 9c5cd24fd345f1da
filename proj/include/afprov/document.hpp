#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afprov/af.hpp"
#include "afprov/critical.hpp"
#include "afprov/grounded.hpp"
#include "afprov/layout.hpp"
#include "afprov/overlay.hpp"
#include "afprov/stable.hpp"

namespace afprov {

inline constexpr std::string_view kSchemaVersion = "af-prov/1";

struct CriticalSetFamily {
  std::size_t stable_index = 0;
  Minimality minimality = Minimality::Cardinality;
  std::vector<CriticalAttackSet> deltas;

  friend bool operator==(const CriticalSetFamily&, const CriticalSetFamily&) = default;
};

struct OverlayKey {
  std::size_t stable_index = 0;
  std::size_t delta_index = 0;
  Minimality minimality = Minimality::Cardinality;

  friend bool operator==(const OverlayKey&, const OverlayKey&) = default;
  friend auto operator<=>(const OverlayKey&, const OverlayKey&) = default;
};

struct LayoutEntry {
  std::optional<OverlayKey> overlay;  // nullopt: the grounded solution
  LayeredLayout layout;

  friend bool operator==(const LayoutEntry&, const LayoutEntry&) = default;
};

/// Everything known about one AF, serialized as schema "af-prov/1".
struct SolutionDocument {
  ArgumentationFramework af;
  GroundedSolution grounded;
  std::vector<StableSolution> stable_solutions;
  std::vector<CriticalSetFamily> critical_sets;
  std::vector<ProvenanceOverlay> overlays;
  std::vector<LayoutEntry> layouts;

  friend bool operator==(const SolutionDocument&, const SolutionDocument&) = default;
};

struct AnalysisOptions {
  bool stable = true;
  std::optional<Minimality> critical;  // nullopt: skip critical sets
  bool overlays = false;               // requires critical
  bool layouts = false;
  std::size_t max_candidates = kDefaultCandidateBudget;
};

/// Runs the engines and assembles a document in canonical order.
SolutionDocument analyze(const ArgumentationFramework& af,
                         const AnalysisOptions& options);

OverlayKey key_of(const ProvenanceOverlay& overlay);

/// Canonical JSON: sorted keys, deterministic arrays, compact, trailing LF.
std::string export_json(const SolutionDocument& doc);
/// Throws Error(SchemaError) on malformed or inconsistent input.
SolutionDocument parse_document(std::string_view json_text);

/// Accepts a full document or a bare {"arguments": [...], "attacks": [...]}.
ArgumentationFramework parse_af_json(std::string_view json_text);

}  // namespace afprov

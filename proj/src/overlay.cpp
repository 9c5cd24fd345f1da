#include "afprov/overlay.hpp"

#include <algorithm>

#include "afprov/error.hpp"

namespace afprov {

namespace {
constexpr std::pair<EffectiveLabel, std::string_view> kEffectiveNames[] = {
    {EffectiveLabel::In, "in"},
    {EffectiveLabel::Out, "out"},
    {EffectiveLabel::InPrimed, "in_primed"},
    {EffectiveLabel::OutPrimed, "out_primed"},
};
}  // namespace

std::string_view to_string(EffectiveLabel label) noexcept {
  for (const auto& [l, name] : kEffectiveNames) {
    if (l == label) return name;
  }
  return "unknown";
}

std::optional<EffectiveLabel> parse_effective_label(std::string_view text) noexcept {
  for (const auto& [l, name] : kEffectiveNames) {
    if (name == text) return l;
  }
  return std::nullopt;
}

bool is_primed(EffectiveLabel label) noexcept {
  return label == EffectiveLabel::InPrimed || label == EffectiveLabel::OutPrimed;
}

bool is_accepted(EffectiveLabel label) noexcept {
  return label == EffectiveLabel::In || label == EffectiveLabel::InPrimed;
}

EdgeType ProvenanceOverlay::edge_type(const AttackEdge& edge) const {
  auto e = af.find_edge(edge);
  if (!e) {
    throw Error(ErrorCode::UnknownArgument,
                "unknown attack " + edge.attacker.str() + "->" + edge.target.str());
  }
  return edge_types.at(*e);
}

bool ProvenanceOverlay::is_primed_edge(EdgeIndex e) const {
  const auto& edge = af.edge(e);
  return node_labels.at(edge.attacker).base == Label::Undec ||
         node_labels.at(edge.target).base == Label::Undec;
}

ProvenanceOverlay build_overlay(const GroundedSolution& grounded,
                                const StableSolution& stable,
                                const CriticalAttackSet& delta) {
  const auto& af = grounded.af();
  if (!validate_delta(af, stable, delta.edges)) {
    throw Error(ErrorCode::InvalidDelta,
                "attack set does not turn the grounded solution into stable "
                "solution " + std::to_string(stable.index));
  }
  const auto modified = without_edges(af, delta.edges);
  const auto sol = solve_grounded(modified);

  ProvenanceOverlay ov{af, grounded, stable.index, delta, {}, {}};
  ov.node_labels.reserve(af.size());
  for (ArgIndex i = 0; i < af.size(); ++i) {
    // Same argument order: V is unchanged.
    const Label base = grounded.label(i);
    const Label now = sol.label(i);
    EffectiveLabel effective{};
    if (base == Label::Undec) {
      effective = now == Label::In ? EffectiveLabel::InPrimed : EffectiveLabel::OutPrimed;
    } else {
      effective = base == Label::In ? EffectiveLabel::In : EffectiveLabel::Out;
    }
    const Length base_length = grounded.length(i);
    const Length effective_length = sol.length(i);
    ov.node_labels.push_back(
        {base, effective, base_length, effective_length, base_length != effective_length});
  }
  ov.edge_types.reserve(af.edge_count());
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const auto& attack = af.attack(e);
    if (auto m = modified.find_edge(attack)) {
      ov.edge_types.push_back(sol.edge_type(*m));
    } else {
      ov.edge_types.push_back(EdgeType::Critical);
    }
  }
  return ov;
}

Labeling effective_labeling(const ProvenanceOverlay& overlay) {
  std::vector<Label> labels;
  labels.reserve(overlay.node_labels.size());
  for (const auto& n : overlay.node_labels) labels.push_back(is_accepted(n.effective) ? Label::In : Label::Out);
  return Labeling(std::move(labels));
}

ArgumentationFramework modified_af(const ProvenanceOverlay& overlay) {
  return without_edges(overlay.af, overlay.delta.edges);
}

ArgumentationFramework reconstruct_af(const ProvenanceOverlay& overlay) {
  std::vector<AttackEdge> edges;
  for (EdgeIndex e = 0; e < overlay.edge_types.size(); ++e) {
    if (overlay.edge_types[e] != EdgeType::Critical) edges.push_back(overlay.af.attack(e));
  }
  edges.insert(edges.end(), overlay.delta.edges.begin(), overlay.delta.edges.end());
  return build_af({overlay.af.arguments().begin(), overlay.af.arguments().end()},
                  std::move(edges));
}

}  // namespace afprov

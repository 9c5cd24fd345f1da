#include "afprov/dot.hpp"

#include <sstream>
#include <vector>

#include "afprov/error.hpp"

namespace afprov {

namespace {

constexpr std::string_view kPrime = "′";
constexpr std::string_view kInfinity = "∞";

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

struct NodeStyle {
  std::string label;
  std::string_view fill;
  bool dashed = false;
};

void check_layout(const ArgumentationFramework& af, std::span<const Length> lengths,
                  const LayeredLayout& layout) {
  if (layout.positions.size() != af.size()) {
    throw Error(ErrorCode::LayoutMismatch, "layout does not place every argument");
  }
  for (ArgIndex i = 0; i < af.size(); ++i) {
    auto it = layout.positions.find(af.argument(i));
    if (it == layout.positions.end()) {
      throw Error(ErrorCode::LayoutMismatch, "layout lacks '" + af.argument(i).str() + "'");
    }
    const auto& layer = it->second.layer;
    const bool ok = lengths[i].is_finite() ? layer && *layer == lengths[i].value() : !layer;
    if (!ok) {
      throw Error(ErrorCode::LayoutMismatch,
                  "layer of '" + af.argument(i).str() + "' disagrees with its length");
    }
  }
}

std::string edge_attributes(EdgeType type, bool primed) {
  std::ostringstream os;
  os << "class=" << quote(std::string(to_string(type)) + (primed ? " primed" : ""));
  switch (type) {
    case EdgeType::SuccessfulPrimary:
      os << ", color=" << quote(primed ? palette::kPaleBlue : palette::kBlue) << ", style=solid";
      break;
    case EdgeType::SuccessfulSecondary:
      os << ", color=" << quote(primed ? palette::kPaleBlue : palette::kBlue) << ", style=dashed";
      break;
    case EdgeType::Failed:
      os << ", color=" << quote(palette::kBlack) << ", style=solid, penwidth=0.6";
      break;
    case EdgeType::Undecided:
      os << ", color=" << quote(palette::kYellow) << ", style=solid";
      break;
    case EdgeType::BlunderB1:
    case EdgeType::BlunderB2:
    case EdgeType::BlunderB3:
      os << ", color=" << quote(palette::kGray) << ", style=dotted";
      break;
    case EdgeType::Critical:
      os << ", color=" << quote(palette::kRed) << ", style=dashed, penwidth=1.5";
      break;
  }
  return os.str();
}

std::string render(const ArgumentationFramework& af, const LayeredLayout& layout,
                   const std::vector<NodeStyle>& nodes, std::span<const EdgeType> types,
                   const std::vector<bool>& primed_edges) {
  std::ostringstream os;
  os << "digraph af {\n"
     << "  rankdir=BT;\n"
     << "  newrank=true;\n"
     << "  node [shape=circle, style=filled, fontname=\"Helvetica\"];\n";

  // Invisible anchors chain the rank groups bottom to top.
  std::vector<std::string> anchors;
  auto group = [&](const std::string& anchor, const std::vector<ArgumentId>& row) {
    os << "  { rank=same; " << quote(anchor)
       << " [style=invis, label=\"\", width=0, height=0];";
    for (const auto& id : row) os << " " << quote(id.str()) << ";";
    os << " }\n";
    anchors.push_back(anchor);
  };
  for (const auto& [layer, row] : layout.layers) group("layer." + std::to_string(layer), row);
  if (!layout.undec_band.empty()) group("undec.band", layout.undec_band);
  if (anchors.size() > 1) {
    os << " ";
    for (std::size_t i = 0; i < anchors.size(); ++i) {
      os << (i == 0 ? " " : " -> ") << quote(anchors[i]);
    }
    os << " [style=invis];\n";
  }

  for (ArgIndex i = 0; i < af.size(); ++i) {
    const auto& n = nodes[i];
    os << "  " << quote(af.argument(i).str()) << " [label=" << quote(n.label)
       << ", fillcolor=" << quote(n.fill);
    if (n.dashed) os << ", style=\"filled,dashed\"";
    os << "];\n";
  }
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const auto& a = af.attack(e);
    os << "  " << quote(a.attacker.str()) << " -> " << quote(a.target.str()) << " ["
       << edge_attributes(types[e], primed_edges[e]) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const GroundedSolution& sol, const LayeredLayout& layout) {
  const auto& af = sol.af();
  check_layout(af, sol.lengths(), layout);
  std::vector<NodeStyle> nodes;
  for (ArgIndex i = 0; i < af.size(); ++i) {
    const auto& name = af.argument(i).str();
    switch (sol.label(i)) {
      case Label::In:
        nodes.push_back({name + "." + sol.length(i).to_string(), palette::kBlue});
        break;
      case Label::Out:
        nodes.push_back({name + "." + sol.length(i).to_string(), palette::kOrange});
        break;
      case Label::Undec:
        nodes.push_back({name + "." + std::string(kInfinity), palette::kYellow});
        break;
    }
  }
  return render(af, layout, nodes, sol.edge_types(), std::vector<bool>(af.edge_count(), false));
}

std::string export_dot(const ProvenanceOverlay& ov, const LayeredLayout& layout) {
  const auto& af = ov.af;
  std::vector<Length> lengths;
  for (const auto& n : ov.node_labels) lengths.push_back(n.effective_length);
  check_layout(af, lengths, layout);
  std::vector<NodeStyle> nodes;
  for (ArgIndex i = 0; i < af.size(); ++i) {
    const auto& n = ov.node_labels[i];
    std::string label = af.argument(i).str() + "." + n.effective_length.to_string();
    if (n.length_changed) label += kPrime;
    switch (n.effective) {
      case EffectiveLabel::In: nodes.push_back({label, palette::kBlue}); break;
      case EffectiveLabel::Out: nodes.push_back({label, palette::kOrange}); break;
      case EffectiveLabel::InPrimed: nodes.push_back({label, palette::kPaleBlue, true}); break;
      case EffectiveLabel::OutPrimed: nodes.push_back({label, palette::kPaleOrange, true}); break;
    }
  }
  std::vector<bool> primed(af.edge_count());
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) primed[e] = ov.is_primed_edge(e);
  return render(af, layout, nodes, ov.edge_types, primed);
}

}  // namespace afprov

#include "afprov/layout.hpp"

#include <algorithm>
#include <span>

namespace afprov {

namespace {

bool counts_for_ordering(EdgeType t) {
  return !is_blunder(t) && t != EdgeType::Critical;
}

struct Barycenter {
  std::uint64_t sum = 0;
  std::uint64_t count = 0;
};

// Exact comparison of sum/count fractions.
bool bary_less(const Barycenter& a, const Barycenter& b) {
  return a.sum * b.count < b.sum * a.count;
}

LayeredLayout build_layout(const ArgumentationFramework& af,
                           std::span<const Length> lengths,
                           std::span<const EdgeType> types) {
  LayeredLayout out;
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (lengths[i].is_finite()) {
      out.layers[lengths[i].value()].push_back(af.argument(i));
    } else {
      out.undec_band.push_back(af.argument(i));
    }
  }

  std::vector<std::uint32_t> slot(af.size(), 0);
  auto renumber = [&](const std::vector<ArgumentId>& row) {
    for (std::uint32_t s = 0; s < row.size(); ++s) slot[*af.find(row[s])] = s;
  };
  for (const auto& [layer, row] : out.layers) renumber(row);

  auto layer_of = [&](ArgIndex i) { return lengths[i].value(); };

  auto reorder = [&](std::vector<ArgumentId>& row, bool from_below) {
    std::vector<std::pair<Barycenter, ArgumentId>> keyed;
    keyed.reserve(row.size());
    for (const auto& id : row) {
      const ArgIndex x = *af.find(id);
      Barycenter b;
      auto edges = from_below ? af.incoming(x) : af.outgoing(x);
      for (EdgeIndex e : edges) {
        if (!counts_for_ordering(types[e])) continue;
        const auto& edge = af.edge(e);
        const ArgIndex other = from_below ? edge.attacker : edge.target;
        if (lengths[other].is_infinite()) continue;
        if (from_below ? layer_of(other) >= layer_of(x) : layer_of(other) <= layer_of(x)) {
          continue;
        }
        b.sum += slot[other];
        ++b.count;
      }
      if (b.count == 0) b = {slot[x], 1};
      keyed.emplace_back(b, id);
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (bary_less(a.first, b.first)) return true;
      if (bary_less(b.first, a.first)) return false;
      return a.second < b.second;
    });
    for (std::size_t s = 0; s < row.size(); ++s) row[s] = keyed[s].second;
    renumber(row);
  };

  if (out.layers.size() > 1) {
    for (auto it = std::next(out.layers.begin()); it != out.layers.end(); ++it) {
      reorder(it->second, true);
    }
    for (auto it = std::next(out.layers.rbegin()); it != out.layers.rend(); ++it) {
      reorder(it->second, false);
    }
  }

  for (const auto& [layer, row] : out.layers) {
    for (std::uint32_t s = 0; s < row.size(); ++s) out.positions[row[s]] = {layer, s};
  }
  for (std::uint32_t s = 0; s < out.undec_band.size(); ++s) {
    out.positions[out.undec_band[s]] = {std::nullopt, s};
  }
  return out;
}

}  // namespace

LayeredLayout layout_grounded(const GroundedSolution& sol) {
  return build_layout(sol.af(), sol.lengths(), sol.edge_types());
}

LayeredLayout layout_overlay(const ProvenanceOverlay& overlay) {
  std::vector<Length> lengths;
  lengths.reserve(overlay.node_labels.size());
  for (const auto& n : overlay.node_labels) lengths.push_back(n.effective_length);
  return build_layout(overlay.af, lengths, overlay.edge_types);
}

}  // namespace afprov

#include "afprov/grounded.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "afprov/error.hpp"

namespace afprov {

namespace {

[[noreturn]] void invariant(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, what);
}

bool is_active(std::span<const std::uint8_t> active, EdgeIndex e) {
  return active.empty() || active[e] != 0;
}

}  // namespace

namespace detail {

StageResult run_stages(const ArgumentationFramework& af,
                       std::span<const std::uint8_t> active) {
  const std::size_t n = af.size();
  if (!active.empty() && active.size() != af.edge_count()) {
    invariant("edge mask size mismatch");
  }
  enum : std::uint8_t { kUnlabeled = 3 };
  std::vector<std::uint8_t> state(n, kUnlabeled);
  std::vector<Length> lengths(n, Length::infinity());
  // Attackers not yet OUT, over active edges.
  std::vector<std::uint32_t> pending(n, 0);
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    if (is_active(active, e)) ++pending[af.edge(e).target];
  }

  std::vector<ArgIndex> frontier;
  for (ArgIndex i = 0; i < n; ++i) {
    if (pending[i] == 0) frontier.push_back(i);
  }
  std::uint32_t stage = 0;
  while (!frontier.empty()) {
    std::vector<ArgIndex> next;
    if (stage % 2 == 0) {
      // R-forall (SAG: lost = IN): every attacker is already OUT.
      for (ArgIndex x : frontier) {
        if (state[x] != kUnlabeled) continue;
        state[x] = static_cast<std::uint8_t>(Label::In);
        lengths[x] = Length::finite(stage);
      }
      for (ArgIndex x : frontier) {
        if (lengths[x] != Length::finite(stage)) continue;
        for (EdgeIndex e : af.outgoing(x)) {
          if (!is_active(active, e)) continue;
          const ArgIndex t = af.edge(e).target;
          if (state[t] == kUnlabeled) next.push_back(t);
        }
      }
    } else {
      // R-exists (SAG: won = OUT): some attacker is already IN.
      for (ArgIndex x : frontier) {
        if (state[x] != kUnlabeled) continue;
        state[x] = static_cast<std::uint8_t>(Label::Out);
        lengths[x] = Length::finite(stage);
        for (EdgeIndex e : af.outgoing(x)) {
          if (!is_active(active, e)) continue;
          const ArgIndex t = af.edge(e).target;
          if (--pending[t] == 0 && state[t] == kUnlabeled) next.push_back(t);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier = std::move(next);
    ++stage;
  }

  std::vector<Label> labels(n, Label::Undec);
  for (ArgIndex i = 0; i < n; ++i) {
    if (state[i] != kUnlabeled) labels[i] = static_cast<Label>(state[i]);
  }
  return {Labeling(std::move(labels)), std::move(lengths)};
}

}  // namespace detail

GroundedSolution::GroundedSolution(ArgumentationFramework af, Labeling labeling,
                                   std::vector<Length> lengths,
                                   std::vector<EdgeType> edge_types)
    : af_(std::move(af)),
      labeling_(std::move(labeling)),
      lengths_(std::move(lengths)),
      edge_types_(std::move(edge_types)) {
  if (labeling_.size() != af_.size() || lengths_.size() != af_.size()) {
    invariant("labeling/lengths not aligned with the framework");
  }
  if (edge_types_.size() != af_.edge_count()) {
    invariant("edge types not aligned with the framework");
  }
  for (ArgIndex i = 0; i < af_.size(); ++i) {
    if ((labeling_[i] == Label::Undec) != lengths_[i].is_infinite()) {
      invariant("argument '" + af_.argument(i).str() +
                "': undec iff infinite length violated");
    }
  }
}

EdgeType GroundedSolution::edge_type(const AttackEdge& edge) const {
  auto e = af_.find_edge(edge);
  if (!e) {
    throw Error(ErrorCode::UnknownArgument,
                "unknown attack " + edge.attacker.str() + "->" +
                    edge.target.str());
  }
  return edge_types_[*e];
}

ExtensionSet GroundedSolution::in_set() const {
  std::vector<ArgumentId> members;
  for (ArgIndex i = 0; i < af_.size(); ++i) {
    if (labeling_[i] == Label::In) members.push_back(af_.argument(i));
  }
  return ExtensionSet(std::move(members));
}

std::vector<EdgeType> classify_edges(const ArgumentationFramework& af,
                                     const Labeling& labeling,
                                     std::span<const Length> lengths) {
  std::vector<EdgeType> types;
  types.reserve(af.edge_count());
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const auto [y, x] = af.edge(e);
    const Label target = labeling[x];
    const Label attacker = labeling[y];
    EdgeType t{};
    if (target == Label::Out && attacker == Label::In) {
      t = lengths[x].value() == lengths[y].value() + 1
              ? EdgeType::SuccessfulPrimary
              : EdgeType::SuccessfulSecondary;
    } else if (target == Label::In && attacker == Label::Out) {
      t = EdgeType::Failed;
    } else if (target == Label::Undec && attacker == Label::Undec) {
      t = EdgeType::Undecided;
    } else if (target == Label::Out && attacker == Label::Out) {
      t = EdgeType::BlunderB1;
    } else if (target == Label::Out && attacker == Label::Undec) {
      t = EdgeType::BlunderB2;
    } else if (target == Label::Undec && attacker == Label::Out) {
      t = EdgeType::BlunderB3;
    } else {
      invariant("forbidden attack type " + af.attack(e).attacker.str() + "(" +
                std::string(to_string(attacker)) + ")->" +
                af.attack(e).target.str() + "(" +
                std::string(to_string(target)) + ")");
    }
    types.push_back(t);
  }
  return types;
}

void check_length_recurrences(const ArgumentationFramework& af,
                              const Labeling& labeling,
                              std::span<const Length> lengths) {
  for (ArgIndex x = 0; x < af.size(); ++x) {
    const Label label = labeling[x];
    const auto& name = af.argument(x).str();
    if (label == Label::Undec) {
      if (lengths[x].is_finite()) invariant(name + ": undec with finite length");
      continue;
    }
    if (lengths[x].is_infinite()) invariant(name + ": decided with length inf");
    const std::uint32_t len = lengths[x].value();
    if (label == Label::In) {
      if (len % 2 != 0) invariant(name + ": IN with odd length");
      std::uint32_t expected = 0;
      for (EdgeIndex e : af.incoming(x)) {
        const ArgIndex y = af.edge(e).attacker;
        if (labeling[y] != Label::Out) invariant(name + ": IN with non-OUT attacker");
        expected = std::max(expected, lengths[y].value() + 1);
      }
      if (expected != len) invariant(name + ": IN length recurrence mismatch");
    } else {
      if (len % 2 != 1) invariant(name + ": OUT with even length");
      std::optional<std::uint32_t> best;
      for (EdgeIndex e : af.incoming(x)) {
        const ArgIndex y = af.edge(e).attacker;
        if (labeling[y] != Label::In) continue;
        const std::uint32_t candidate = lengths[y].value() + 1;
        if (!best || candidate < *best) best = candidate;
      }
      if (!best || *best != len) invariant(name + ": OUT length recurrence mismatch");
    }
  }
}

GroundedSolution solve_grounded(const ArgumentationFramework& af) {
  auto stages = detail::run_stages(af, {});
  check_length_recurrences(af, stages.labeling, stages.lengths);
  auto types = classify_edges(af, stages.labeling, stages.lengths);
  return GroundedSolution(af, std::move(stages.labeling),
                          std::move(stages.lengths), std::move(types));
}

namespace {

ProvenanceSubgraph provenance(const GroundedSolution& sol, const ArgumentId& x,
                              bool include_secondary) {
  const auto& af = sol.af();
  const ArgIndex root = af.index_of(x);
  std::vector<bool> seen(af.size(), false);
  std::set<EdgeIndex> edges;
  std::vector<ArgIndex> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    const ArgIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : af.incoming(v)) {
      const EdgeType t = sol.edge_type(e);
      if (is_blunder(t) || t == EdgeType::Critical) continue;
      if (!include_secondary && t == EdgeType::SuccessfulSecondary) continue;
      edges.insert(e);
      const ArgIndex y = af.edge(e).attacker;
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  ProvenanceSubgraph out{x, {}, {}};
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (seen[i]) out.nodes.push_back(af.argument(i));
  }
  for (EdgeIndex e : edges) out.edges.emplace_back(af.attack(e), sol.edge_type(e));
  return out;
}

}  // namespace

ProvenanceSubgraph actual_provenance(const GroundedSolution& sol,
                                     const ArgumentId& x) {
  return provenance(sol, x, true);
}

ProvenanceSubgraph primary_provenance(const GroundedSolution& sol,
                                      const ArgumentId& x) {
  return provenance(sol, x, false);
}

}  // namespace afprov

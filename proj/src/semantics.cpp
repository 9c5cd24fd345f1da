#include "afprov/semantics.hpp"

#include <algorithm>
#include <cstdint>

#include "afprov/error.hpp"

namespace afprov {

ExtensionSet::ExtensionSet(std::vector<ArgumentId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ExtensionSet ExtensionSet::from_names(const std::vector<std::string>& names) {
  std::vector<ArgumentId> ids;
  ids.reserve(names.size());
  for (const auto& n : names) ids.emplace_back(n);
  return ExtensionSet(std::move(ids));
}

bool ExtensionSet::contains(const ArgumentId& id) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), id);
}

bool ExtensionSet::is_subset_of(const ExtensionSet& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool extension_less(const ExtensionSet& a, const ExtensionSet& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

std::vector<bool> membership(const ArgumentationFramework& af,
                             const ExtensionSet& s) {
  std::vector<bool> in(af.size(), false);
  for (const auto& m : s.members()) {
    auto i = af.find(m);
    if (!i) {
      throw Error(ErrorCode::MemberNotInAF,
                  "argument '" + m.str() + "' is not in the framework");
    }
    in[*i] = true;
  }
  return in;
}

ExtensionSet from_membership(const ArgumentationFramework& af,
                             const std::vector<bool>& in) {
  std::vector<ArgumentId> members;
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (in[i]) members.push_back(af.argument(i));
  }
  return ExtensionSet(std::move(members));
}

namespace {

bool conflict_free_mask(const ArgumentationFramework& af,
                        const std::vector<bool>& in) {
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const auto& edge = af.edge(e);
    if (in[edge.attacker] && in[edge.target]) return false;
  }
  return true;
}

// attacked[x] = some member of S attacks x.
std::vector<bool> attacked_by_mask(const ArgumentationFramework& af,
                                   const std::vector<bool>& in) {
  std::vector<bool> attacked(af.size(), false);
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const auto& edge = af.edge(e);
    if (in[edge.attacker]) attacked[edge.target] = true;
  }
  return attacked;
}

std::vector<bool> characteristic_mask(const ArgumentationFramework& af,
                                      const std::vector<bool>& in) {
  const auto attacked = attacked_by_mask(af, in);
  std::vector<bool> defended(af.size(), true);
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const auto& edge = af.edge(e);
    if (!attacked[edge.attacker]) defended[edge.target] = false;
  }
  return defended;
}

bool admissible_mask(const ArgumentationFramework& af,
                     const std::vector<bool>& in) {
  if (!conflict_free_mask(af, in)) return false;
  const auto f = characteristic_mask(af, in);
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (in[i] && !f[i]) return false;
  }
  return true;
}

bool complete_mask(const ArgumentationFramework& af,
                   const std::vector<bool>& in) {
  return conflict_free_mask(af, in) && characteristic_mask(af, in) == in;
}

bool stable_mask(const ArgumentationFramework& af, const std::vector<bool>& in) {
  if (!complete_mask(af, in)) return false;
  const auto attacked = attacked_by_mask(af, in);
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (!in[i] && !attacked[i]) return false;
  }
  return true;
}

}  // namespace

bool is_conflict_free(const ArgumentationFramework& af, const ExtensionSet& s) {
  return conflict_free_mask(af, membership(af, s));
}

ExtensionSet characteristic(const ArgumentationFramework& af,
                            const ExtensionSet& s) {
  return from_membership(af, characteristic_mask(af, membership(af, s)));
}

bool is_admissible(const ArgumentationFramework& af, const ExtensionSet& s) {
  return admissible_mask(af, membership(af, s));
}

bool is_complete(const ArgumentationFramework& af, const ExtensionSet& s) {
  return complete_mask(af, membership(af, s));
}

bool is_stable(const ArgumentationFramework& af, const ExtensionSet& s) {
  return stable_mask(af, membership(af, s));
}

ExtensionSet grounded_by_least_fixpoint(const ArgumentationFramework& af) {
  std::vector<bool> current(af.size(), false);
  while (true) {
    auto next = characteristic_mask(af, current);
    if (next == current) break;
    current = std::move(next);
  }
  return from_membership(af, current);
}

std::string_view to_string(Semantics s) noexcept {
  switch (s) {
    case Semantics::ConflictFree: return "conflict_free";
    case Semantics::Admissible: return "admissible";
    case Semantics::Complete: return "complete";
    case Semantics::Stable: return "stable";
  }
  return "unknown";
}

std::vector<ExtensionSet> enumerate_bruteforce(const ArgumentationFramework& af,
                                               Semantics semantics) {
  if (af.size() > kOracleMaxArguments) {
    throw Error(ErrorCode::TooLargeForOracle,
                "brute-force oracle limited to " +
                    std::to_string(kOracleMaxArguments) + " arguments, got " +
                    std::to_string(af.size()));
  }
  std::vector<ExtensionSet> result;
  const std::uint32_t n = static_cast<std::uint32_t>(af.size());
  std::vector<bool> in(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::uint32_t i = 0; i < n; ++i) in[i] = (bits >> i) & 1U;
    bool ok = false;
    switch (semantics) {
      case Semantics::ConflictFree: ok = conflict_free_mask(af, in); break;
      case Semantics::Admissible: ok = admissible_mask(af, in); break;
      case Semantics::Complete: ok = complete_mask(af, in); break;
      case Semantics::Stable: ok = stable_mask(af, in); break;
    }
    if (ok) result.push_back(from_membership(af, in));
  }
  std::sort(result.begin(), result.end(), extension_less);
  return result;
}

}  // namespace afprov

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "afprov/af.hpp"

namespace afprov {

/// A set of arguments, kept sorted and unique.
class ExtensionSet {
 public:
  ExtensionSet() = default;
  explicit ExtensionSet(std::vector<ArgumentId> members);

  static ExtensionSet from_names(const std::vector<std::string>& names);

  std::span<const ArgumentId> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const ArgumentId& id) const noexcept;
  bool is_subset_of(const ExtensionSet& other) const noexcept;

  friend bool operator==(const ExtensionSet&, const ExtensionSet&) = default;

 private:
  std::vector<ArgumentId> members_;
};

/// Deterministic order for families of sets: cardinality, then lexicographic.
bool extension_less(const ExtensionSet& a, const ExtensionSet& b) noexcept;

/// Membership vector aligned with af's argument order.
/// Throws Error(MemberNotInAF) when s names an argument outside V.
std::vector<bool> membership(const ArgumentationFramework& af,
                             const ExtensionSet& s);
ExtensionSet from_membership(const ArgumentationFramework& af,
                             const std::vector<bool>& in);

bool is_conflict_free(const ArgumentationFramework& af, const ExtensionSet& s);
/// F(S): arguments all of whose attackers are attacked by S.
ExtensionSet characteristic(const ArgumentationFramework& af,
                            const ExtensionSet& s);
bool is_admissible(const ArgumentationFramework& af, const ExtensionSet& s);
bool is_complete(const ArgumentationFramework& af, const ExtensionSet& s);
bool is_stable(const ArgumentationFramework& af, const ExtensionSet& s);

/// Least fixpoint of F from the empty set.
ExtensionSet grounded_by_least_fixpoint(const ArgumentationFramework& af);

enum class Semantics { ConflictFree, Admissible, Complete, Stable };

std::string_view to_string(Semantics s) noexcept;

inline constexpr std::size_t kOracleMaxArguments = 20;

/// Exhaustive search over all 2^|V| subsets, sorted by extension_less.
/// Throws Error(TooLargeForOracle) when |V| > kOracleMaxArguments.
std::vector<ExtensionSet> enumerate_bruteforce(const ArgumentationFramework& af,
                                               Semantics semantics);

}  // namespace afprov

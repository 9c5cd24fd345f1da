#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace afprov {

/// Opaque argument name. Nonempty, no whitespace or control characters and
/// none of `( ) , .`. Ordered by raw byte comparison; every deterministic
/// tie-break in the library goes through this order.
class ArgumentId {
 public:
  explicit ArgumentId(std::string name);

  static bool is_valid(std::string_view name) noexcept;

  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const ArgumentId&, const ArgumentId&) = default;
  friend std::strong_ordering operator<=>(const ArgumentId& a,
                                          const ArgumentId& b) noexcept {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

struct AttackEdge {
  ArgumentId attacker;
  ArgumentId target;

  friend bool operator==(const AttackEdge&, const AttackEdge&) = default;
  friend auto operator<=>(const AttackEdge&, const AttackEdge&) = default;
};

using ArgIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

struct IndexedEdge {
  ArgIndex attacker;
  ArgIndex target;
};

/// Finite attack digraph G = (V, E). Arguments and attacks are kept sorted and
/// deduplicated, so indices are a pure function of content. Immutable once
/// built.
class ArgumentationFramework {
 public:
  ArgumentationFramework() = default;

  std::span<const ArgumentId> arguments() const noexcept { return arguments_; }
  std::span<const AttackEdge> attacks() const noexcept { return attacks_; }
  std::size_t size() const noexcept { return arguments_.size(); }
  std::size_t edge_count() const noexcept { return attacks_.size(); }
  bool empty() const noexcept { return arguments_.empty(); }

  const ArgumentId& argument(ArgIndex i) const { return arguments_.at(i); }
  const AttackEdge& attack(EdgeIndex e) const { return attacks_.at(e); }
  const IndexedEdge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<ArgIndex> find(const ArgumentId& id) const noexcept;
  std::optional<ArgIndex> find(std::string_view name) const noexcept;
  /// Throws Error(UnknownArgument).
  ArgIndex index_of(const ArgumentId& id) const;
  std::optional<EdgeIndex> find_edge(const AttackEdge& edge) const noexcept;

  /// Edge indices of attacks targeting / issued by argument i, ascending.
  std::span<const EdgeIndex> incoming(ArgIndex i) const;
  std::span<const EdgeIndex> outgoing(ArgIndex i) const;

  friend bool operator==(const ArgumentationFramework& a,
                         const ArgumentationFramework& b) {
    return a.arguments_ == b.arguments_ && a.attacks_ == b.attacks_;
  }

  friend ArgumentationFramework build_af(std::vector<ArgumentId> arguments,
                                         std::vector<AttackEdge> attacks);

 private:
  std::vector<ArgumentId> arguments_;
  std::vector<AttackEdge> attacks_;
  std::vector<IndexedEdge> edges_;
  // CSR adjacency: incoming_[incoming_offsets_[i] .. incoming_offsets_[i+1]).
  std::vector<std::uint32_t> incoming_offsets_;
  std::vector<EdgeIndex> incoming_;
  std::vector<std::uint32_t> outgoing_offsets_;
  std::vector<EdgeIndex> outgoing_;
};

/// Sorts and deduplicates; endpoints missing from `arguments` are added.
ArgumentationFramework build_af(std::vector<ArgumentId> arguments,
                                std::vector<AttackEdge> attacks);

/// String convenience over build_af. Throws Error(InvalidToken).
ArgumentationFramework make_af(
    const std::vector<std::string>& arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks);

/// The subgraph (V, E minus `removed`); edges not in E are ignored.
ArgumentationFramework without_edges(const ArgumentationFramework& af,
                                     std::span<const AttackEdge> removed);

enum class Label : std::uint8_t { In, Out, Undec };

std::string_view to_string(Label label) noexcept;
std::optional<Label> parse_label(std::string_view text) noexcept;

/// Total assignment of labels, aligned with the owning AF's argument order.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  Label operator[](ArgIndex i) const { return labels_.at(i); }
  std::size_t size() const noexcept { return labels_.size(); }
  std::span<const Label> values() const noexcept { return labels_; }

  bool is_two_valued() const noexcept;
  std::size_t count(Label label) const noexcept;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
};

/// Optimal length of an argument: a natural number, or infinity for
/// undecided arguments. Infinity orders after every finite value.
class Length {
 public:
  constexpr Length() noexcept = default;

  static constexpr Length infinity() noexcept { return Length(); }
  static constexpr Length finite(std::uint32_t v) noexcept {
    Length l;
    l.value_ = v;
    return l;
  }

  constexpr bool is_finite() const noexcept { return value_.has_value(); }
  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Precondition: is_finite().
  constexpr std::uint32_t value() const { return value_.value(); }

  std::string to_string() const;

  friend constexpr bool operator==(const Length&, const Length&) = default;
  friend constexpr std::strong_ordering operator<=>(const Length& a,
                                                    const Length& b) noexcept {
    if (a.is_finite() && b.is_finite()) return *a.value_ <=> *b.value_;
    return a.is_infinite() ? (b.is_infinite() ? std::strong_ordering::equal
                                              : std::strong_ordering::greater)
                           : std::strong_ordering::less;
  }

 private:
  std::optional<std::uint32_t> value_;
};

enum class EdgeType : std::uint8_t {
  SuccessfulPrimary,
  SuccessfulSecondary,
  Failed,
  Undecided,
  BlunderB1,  // target OUT, attacker OUT
  BlunderB2,  // target OUT, attacker UNDEC
  BlunderB3,  // target UNDEC, attacker OUT
  Critical,   // overlays only
};

std::string_view to_string(EdgeType type) noexcept;
std::optional<EdgeType> parse_edge_type(std::string_view text) noexcept;
bool is_blunder(EdgeType type) noexcept;

}  // namespace afprov

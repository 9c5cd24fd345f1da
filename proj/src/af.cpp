#include "afprov/af.hpp"

#include <algorithm>

#include "afprov/error.hpp"

namespace afprov {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidToken: return "invalid_token";
    case ErrorCode::MemberNotInAF: return "member_not_in_af";
    case ErrorCode::UnknownArgument: return "unknown_argument";
    case ErrorCode::TooLargeForOracle: return "too_large_for_oracle";
    case ErrorCode::InvariantViolation: return "invariant_violation";
    case ErrorCode::NoCriticalSetFound: return "no_critical_set_found";
    case ErrorCode::BudgetExceeded: return "budget_exceeded";
    case ErrorCode::InvalidDelta: return "invalid_delta";
    case ErrorCode::SyntaxError: return "syntax_error";
    case ErrorCode::MissingSeparator: return "missing_separator";
    case ErrorCode::LayoutMismatch: return "layout_mismatch";
    case ErrorCode::SchemaError: return "schema_error";
  }
  return "unknown";
}

SyntaxError::SyntaxError(ErrorCode code, std::size_t line, std::size_t column,
                         const std::string& message)
    : Error(code, std::to_string(line) + ":" + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column) {}

bool ArgumentId::is_valid(std::string_view name) noexcept {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c <= 0x20 || c == 0x7f) return false;
    if (c == '(' || c == ')' || c == ',' || c == '.') return false;
  }
  return true;
}

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
  if (!is_valid(name_)) {
    throw Error(ErrorCode::InvalidToken,
                "invalid argument name '" + name_ + "'");
  }
}

namespace {

void build_csr(std::size_t n, const std::vector<IndexedEdge>& edges,
               bool by_target, std::vector<std::uint32_t>& offsets,
               std::vector<EdgeIndex>& items) {
  offsets.assign(n + 1, 0);
  for (const auto& e : edges) ++offsets[(by_target ? e.target : e.attacker) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  items.assign(edges.size(), 0);
  std::vector<std::uint32_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeIndex e = 0; e < edges.size(); ++e) {
    const auto owner = by_target ? edges[e].target : edges[e].attacker;
    items[cursor[owner]++] = e;
  }
}

}  // namespace

ArgumentationFramework build_af(std::vector<ArgumentId> arguments,
                                std::vector<AttackEdge> attacks) {
  ArgumentationFramework af;
  for (const auto& a : attacks) {
    arguments.push_back(a.attacker);
    arguments.push_back(a.target);
  }
  std::sort(arguments.begin(), arguments.end());
  arguments.erase(std::unique(arguments.begin(), arguments.end()),
                  arguments.end());
  std::sort(attacks.begin(), attacks.end());
  attacks.erase(std::unique(attacks.begin(), attacks.end()), attacks.end());

  af.arguments_ = std::move(arguments);
  af.attacks_ = std::move(attacks);
  af.edges_.reserve(af.attacks_.size());
  for (const auto& a : af.attacks_) {
    af.edges_.push_back({*af.find(a.attacker), *af.find(a.target)});
  }
  build_csr(af.arguments_.size(), af.edges_, true, af.incoming_offsets_,
            af.incoming_);
  build_csr(af.arguments_.size(), af.edges_, false, af.outgoing_offsets_,
            af.outgoing_);
  return af;
}

ArgumentationFramework make_af(
    const std::vector<std::string>& arguments,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
  std::vector<ArgumentId> ids;
  ids.reserve(arguments.size());
  for (const auto& a : arguments) ids.emplace_back(a);
  std::vector<AttackEdge> edges;
  edges.reserve(attacks.size());
  for (const auto& [from, to] : attacks) {
    edges.push_back({ArgumentId(from), ArgumentId(to)});
  }
  return build_af(std::move(ids), std::move(edges));
}

ArgumentationFramework without_edges(const ArgumentationFramework& af,
                                     std::span<const AttackEdge> removed) {
  std::vector<AttackEdge> kept;
  kept.reserve(af.edge_count());
  for (const auto& a : af.attacks()) {
    if (std::find(removed.begin(), removed.end(), a) == removed.end()) {
      kept.push_back(a);
    }
  }
  return build_af({af.arguments().begin(), af.arguments().end()},
                  std::move(kept));
}

std::optional<ArgIndex> ArgumentationFramework::find(
    const ArgumentId& id) const noexcept {
  auto it = std::lower_bound(arguments_.begin(), arguments_.end(), id);
  if (it == arguments_.end() || *it != id) return std::nullopt;
  return static_cast<ArgIndex>(it - arguments_.begin());
}

std::optional<ArgIndex> ArgumentationFramework::find(
    std::string_view name) const noexcept {
  auto it = std::lower_bound(
      arguments_.begin(), arguments_.end(), name,
      [](const ArgumentId& a, std::string_view n) { return a.str() < n; });
  if (it == arguments_.end() || it->str() != name) return std::nullopt;
  return static_cast<ArgIndex>(it - arguments_.begin());
}

ArgIndex ArgumentationFramework::index_of(const ArgumentId& id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorCode::UnknownArgument, "unknown argument '" + id.str() + "'");
}

std::optional<EdgeIndex> ArgumentationFramework::find_edge(
    const AttackEdge& edge) const noexcept {
  auto it = std::lower_bound(attacks_.begin(), attacks_.end(), edge);
  if (it == attacks_.end() || *it != edge) return std::nullopt;
  return static_cast<EdgeIndex>(it - attacks_.begin());
}

std::span<const EdgeIndex> ArgumentationFramework::incoming(ArgIndex i) const {
  return std::span<const EdgeIndex>(incoming_)
      .subspan(incoming_offsets_.at(i), incoming_offsets_.at(i + 1) -
                                            incoming_offsets_.at(i));
}

std::span<const EdgeIndex> ArgumentationFramework::outgoing(ArgIndex i) const {
  return std::span<const EdgeIndex>(outgoing_)
      .subspan(outgoing_offsets_.at(i), outgoing_offsets_.at(i + 1) -
                                            outgoing_offsets_.at(i));
}

std::string_view to_string(Label label) noexcept {
  switch (label) {
    case Label::In: return "in";
    case Label::Out: return "out";
    case Label::Undec: return "undec";
  }
  return "undec";
}

std::optional<Label> parse_label(std::string_view text) noexcept {
  if (text == "in") return Label::In;
  if (text == "out") return Label::Out;
  if (text == "undec") return Label::Undec;
  return std::nullopt;
}

bool Labeling::is_two_valued() const noexcept {
  return std::none_of(labels_.begin(), labels_.end(),
                      [](Label l) { return l == Label::Undec; });
}

std::size_t Labeling::count(Label label) const noexcept {
  return static_cast<std::size_t>(
      std::count(labels_.begin(), labels_.end(), label));
}

std::string Length::to_string() const {
  return is_finite() ? std::to_string(*value_) : std::string("inf");
}

namespace {
constexpr std::pair<EdgeType, std::string_view> kEdgeTypeNames[] = {
    {EdgeType::SuccessfulPrimary, "successful_primary"},
    {EdgeType::SuccessfulSecondary, "successful_secondary"},
    {EdgeType::Failed, "failed"},
    {EdgeType::Undecided, "undecided"},
    {EdgeType::BlunderB1, "blunder_b1"},
    {EdgeType::BlunderB2, "blunder_b2"},
    {EdgeType::BlunderB3, "blunder_b3"},
    {EdgeType::Critical, "critical"},
};
}  // namespace

std::string_view to_string(EdgeType type) noexcept {
  for (const auto& [t, name] : kEdgeTypeNames) {
    if (t == type) return name;
  }
  return "unknown";
}

std::optional<EdgeType> parse_edge_type(std::string_view text) noexcept {
  for (const auto& [t, name] : kEdgeTypeNames) {
    if (name == text) return t;
  }
  return std::nullopt;
}

bool is_blunder(EdgeType type) noexcept {
  return type == EdgeType::BlunderB1 || type == EdgeType::BlunderB2 ||
         type == EdgeType::BlunderB3;
}

}  // namespace afprov

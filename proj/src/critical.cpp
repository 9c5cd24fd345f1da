#include "afprov/critical.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <set>
#include <sstream>

#include "afprov/error.hpp"

namespace afprov {

std::string_view to_string(Minimality m) noexcept {
  return m == Minimality::Cardinality ? "cardinality" : "subset";
}

std::optional<Minimality> parse_minimality(std::string_view text) noexcept {
  if (text == "cardinality") return Minimality::Cardinality;
  if (text == "subset") return Minimality::Subset;
  return std::nullopt;
}

std::vector<AttackEdge> candidate_edges(const GroundedSolution& grounded,
                                        CandidatePolicy policy) {
  const auto& af = grounded.af();
  std::vector<AttackEdge> out;
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    const bool attacker_undec = grounded.label(af.edge(e).attacker) == Label::Undec;
    const bool target_undec = grounded.label(af.edge(e).target) == Label::Undec;
    const bool pick = policy == CandidatePolicy::UndecidedPairs
                          ? attacker_undec && target_undec
                          : attacker_undec || target_undec;
    if (pick) out.push_back(af.attack(e));
  }
  return out;
}

namespace {

std::vector<EdgeIndex> edge_indices(const ArgumentationFramework& af,
                                    std::span<const AttackEdge> edges) {
  std::vector<EdgeIndex> out;
  out.reserve(edges.size());
  for (const auto& edge : edges) {
    auto e = af.find_edge(edge);
    if (!e) {
      throw Error(ErrorCode::InvalidDelta, "attack " + edge.attacker.str() + "->" +
                                               edge.target.str() +
                                               " is not in the framework");
    }
    out.push_back(*e);
  }
  return out;
}

bool matches_stable(const ArgumentationFramework& af, const Labeling& target,
                    std::span<const std::uint8_t> active) {
  return detail::run_stages(af, active).labeling == target;
}

}  // namespace

bool validate_delta(const ArgumentationFramework& af,
                    const StableSolution& stable,
                    std::span<const AttackEdge> delta) {
  std::vector<std::uint8_t> active(af.edge_count(), 1);
  for (EdgeIndex e : edge_indices(af, delta)) active[e] = 0;
  return matches_stable(af, stable.labeling, active);
}

std::vector<CriticalAttackSet> find_critical_sets(
    const GroundedSolution& grounded, const StableSolution& stable,
    const CriticalSearchOptions& options) {
  const auto& af = grounded.af();
  auto candidates = edge_indices(af, candidate_edges(grounded, options.candidates));
  const std::size_t budget = std::min<std::size_t>(options.max_candidates, 63);
  if (candidates.size() > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(candidates.size()) +
                    " candidate attacks exceed the search budget of " +
                    std::to_string(budget));
  }

  // Putting back an attack on an argument outside the target extension never
  // changes the labeling, so minimal sets only remove attacks on members.
  const std::size_t considered = candidates.size();
  std::erase_if(candidates, [&](EdgeIndex e) { return stable.labeling[af.edge(e).target] != Label::In; });

  std::vector<std::uint64_t> found;
  const std::size_t n = candidates.size();
  std::vector<std::uint8_t> active(af.edge_count(), 1);

  if (grounded.labeling() == stable.labeling) {
    found.push_back(0);
  } else {
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= n; ++k) {
      if (options.minimality == Minimality::Cardinality && !found.empty()) break;
      // Lexicographic k-combinations of candidate positions.
      pick.resize(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        std::uint64_t bits = 0;
        for (std::size_t p : pick) bits |= std::uint64_t{1} << p;
        const bool covers_found = std::any_of(found.begin(), found.end(), [&](std::uint64_t f) {
          return (f & bits) == f;
        });
        if (!covers_found) {
          for (std::size_t p : pick) active[candidates[p]] = 0;
          if (matches_stable(af, stable.labeling, active)) found.push_back(bits);
          for (std::size_t p : pick) active[candidates[p]] = 1;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  if (found.empty()) {
    throw Error(ErrorCode::NoCriticalSetFound,
                "no subset of the " + std::to_string(considered) +
                    " candidate attacks yields stable solution " +
                    std::to_string(stable.index));
  }

  std::vector<std::vector<AttackEdge>> deltas;
  for (std::uint64_t bits : found) {
    std::vector<AttackEdge> edges;
    for (std::size_t p = 0; p < n; ++p) {
      if ((bits >> p) & 1U) edges.push_back(af.attack(candidates[p]));
    }
    deltas.push_back(std::move(edges));
  }
  std::sort(deltas.begin(), deltas.end());

  std::vector<CriticalAttackSet> out;
  for (auto& d : deltas) {
    out.push_back({stable.index, out.size() + 1, std::move(d), options.minimality});
  }
  return out;
}

namespace {

constexpr std::string_view kCriticalProgram =
    "arg(X) :- attacks(X,_).\n"
    "arg(X) :- attacks(_,X).\n"
    "\n"
    "in0(X) :- arg(X), out0(Y) : attacks(Y,X).\n"
    "out0(X) :- attacks(Y,X), in0(Y).\n"
    "undec0(X) :- arg(X), not in0(X), not out0(X).\n"
    "\n"
    "{critical(Y,X)} :- attacks(Y,X), undec0(Y), undec0(X). \n"
    "\n"
    "attacks1(Y,X) :- attacks(Y,X), not critical(Y,X).\n"
    "\n"
    "in(X) :- arg(X), out(Y) : attacks1(Y,X).\n"
    "out(X) :- attacks1(Y,X), in(Y).\n"
    "undec(X) :- arg(X), not in(X), not out(X).\n"
    "\n"
    ":- undec(_).\n"
    "\n"
    "critical_cnt(N) :- N = #count{(X,Y) : critical(X,Y)}.\n"
    "#minimize {N : critical_cnt(N)}.\n";

bool is_asp_constant(std::string_view s) {
  if (s.empty()) return false;
  const auto c0 = static_cast<unsigned char>(s[0]);
  if (std::isdigit(c0)) {
    // Integers; a leading zero would alias another name.
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }) &&
           (s.size() == 1 || s[0] != '0');
  }
  if (!std::islower(c0)) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

// Lowercased bare constants when that is injective and valid, otherwise
// quoted strings for every argument.
std::vector<std::string> asp_terms(const ArgumentationFramework& af) {
  std::vector<std::string> terms;
  std::set<std::string> seen;
  bool bare = true;
  for (const auto& a : af.arguments()) {
    auto t = lowercase(a.str());
    if (!is_asp_constant(t) || !seen.insert(t).second) bare = false;
    terms.push_back(std::move(t));
  }
  if (!bare) {
    terms.clear();
    for (const auto& a : af.arguments()) terms.push_back(quoted(a.str()));
  }
  return terms;
}

}  // namespace

std::string emit_asp_program(const ArgumentationFramework& af,
                             const ExtensionSet& stable) {
  const auto in = membership(af, stable);
  const auto terms = asp_terms(af);
  std::ostringstream os;
  os << kCriticalProgram;
  os << "\n% input framework\n";
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (af.incoming(i).empty() && af.outgoing(i).empty()) {
      os << "arg(" << terms[i] << ").\n";
    }
  }
  for (EdgeIndex e = 0; e < af.edge_count(); ++e) {
    os << "attacks(" << terms[af.edge(e).attacker] << ","
       << terms[af.edge(e).target] << ").\n";
  }
  os << "\n% target stable labeling\n";
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (in[i]) {
      os << ":- not in(" << terms[i] << ").\n";
    } else {
      os << ":- in(" << terms[i] << ").\n";
    }
  }
  return os.str();
}

}  // namespace afprov

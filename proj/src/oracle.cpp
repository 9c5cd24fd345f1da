#include "afprov/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "afprov/error.hpp"
#include "afprov/grounded.hpp"
#include "afprov/stable.hpp"

namespace afprov::oracle {

namespace {

std::string describe(const ExtensionSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s.members()[i].str();
  }
  return out + "}";
}

std::string describe(const std::vector<AttackEdge>& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ",";
    out += edges[i].attacker.str() + "->" + edges[i].target.str();
  }
  return out + "}";
}

std::string describe(const ArgumentationFramework& af) {
  std::ostringstream os;
  os << "AF[";
  for (const auto& a : af.arguments()) os << a.str() << " ";
  os << "|";
  for (const auto& e : af.attacks()) os << " " << e.attacker.str() << "->" << e.target.str();
  os << "]";
  return os.str();
}

}  // namespace

Labeling grounded_labeling(const ArgumentationFramework& af) {
  const auto in = membership(af, grounded_by_least_fixpoint(af));
  std::vector<Label> labels(af.size(), Label::Undec);
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (in[i]) labels[i] = Label::In;
  }
  for (const auto& e : af.attacks()) {
    if (in[*af.find(e.attacker)]) labels[*af.find(e.target)] = Label::Out;
  }
  return Labeling(std::move(labels));
}

std::vector<AttackEdge> undecided_attacks(const ArgumentationFramework& af) {
  const auto labels = grounded_labeling(af);
  std::vector<AttackEdge> out;
  for (const auto& e : af.attacks()) {
    if (labels[*af.find(e.attacker)] == Label::Undec &&
        labels[*af.find(e.target)] == Label::Undec) {
      out.push_back(e);
    }
  }
  return out;
}

bool delta_yields(const ArgumentationFramework& af, const ExtensionSet& target,
                  std::span<const AttackEdge> delta) {
  const auto modified = without_edges(af, delta);
  const auto labels = grounded_labeling(modified);
  return labels.is_two_valued() && grounded_by_least_fixpoint(modified) == target;
}

std::vector<std::vector<AttackEdge>> critical_sets_bruteforce(
    const ArgumentationFramework& af, const ExtensionSet& target,
    std::span<const AttackEdge> candidates, Minimality minimality) {
  if (candidates.size() > 20) {
    throw Error(ErrorCode::TooLargeForOracle, "critical-set oracle limited to 20 candidates");
  }
  std::vector<std::uint32_t> valid;
  const std::uint32_t n = static_cast<std::uint32_t>(candidates.size());
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
    std::vector<AttackEdge> delta;
    for (std::uint32_t p = 0; p < n; ++p) {
      if ((bits >> p) & 1U) delta.push_back(candidates[p]);
    }
    if (delta_yields(af, target, delta)) valid.push_back(bits);
  }
  std::vector<std::uint32_t> chosen;
  if (minimality == Minimality::Cardinality) {
    int best = 64;
    for (auto v : valid) best = std::min(best, std::popcount(v));
    for (auto v : valid) {
      if (std::popcount(v) == best) chosen.push_back(v);
    }
  } else {
    for (auto v : valid) {
      const bool has_proper_subset = std::any_of(valid.begin(), valid.end(), [&](std::uint32_t w) {
        return w != v && (w & v) == w;
      });
      if (!has_proper_subset) chosen.push_back(v);
    }
  }
  std::vector<std::vector<AttackEdge>> out;
  for (auto bits : chosen) {
    std::vector<AttackEdge> delta;
    for (std::uint32_t p = 0; p < n; ++p) {
      if ((bits >> p) & 1U) delta.push_back(candidates[p]);
    }
    std::sort(delta.begin(), delta.end());
    out.push_back(std::move(delta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ArgumentationFramework random_af(std::mt19937_64& rng, const RandomAfParams& params) {
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  const std::size_t span = params.max_args - params.min_args + 1;
  const std::size_t n = params.min_args + static_cast<std::size_t>(rng() % span);
  const double density = params.min_density + (params.max_density - params.min_density) * unit();

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 26 ? std::string(1, static_cast<char>('A' + i)) : "a" + std::to_string(i));
  }
  std::vector<std::pair<std::string, std::string>> attacks;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !params.self_loops) continue;
      if (unit() < density) attacks.emplace_back(names[i], names[j]);
    }
  }
  return make_af(names, attacks);
}

std::vector<ArgumentationFramework> random_suite(std::uint64_t seed, std::size_t count,
                                                 const RandomAfParams& params) {
  std::mt19937_64 rng(seed);
  std::vector<ArgumentationFramework> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_af(rng, params));
  return out;
}

CrossCheckReport cross_check(const ArgumentationFramework& af, std::size_t max_oracle_candidates) {
  CrossCheckReport report;
  auto mismatch = [&](const std::string& what) {
    report.mismatches.push_back(describe(af) + ": " + what);
  };

  const auto grounded = solve_grounded(af);
  const auto lfp = grounded_by_least_fixpoint(af);
  const auto complete = enumerate_bruteforce(af, Semantics::Complete);
  if (grounded.in_set() != lfp) {
    mismatch("grounded engine " + describe(grounded.in_set()) + " vs least fixpoint " + describe(lfp));
  }
  if (complete.empty() || complete.front() != lfp ||
      !std::all_of(complete.begin(), complete.end(),
                   [&](const ExtensionSet& c) { return lfp.is_subset_of(c); })) {
    mismatch("least fixpoint " + describe(lfp) + " is not the least complete extension");
  }
  if (grounded.labeling() != grounded_labeling(af)) mismatch("grounded labelings differ");

  const auto stable = enumerate_stable(grounded);
  const auto brute = enumerate_bruteforce(af, Semantics::Stable);
  std::vector<ExtensionSet> engine;
  for (const auto& s : stable) engine.push_back(s.extension);
  if (engine != brute) mismatch("stable engine and brute force disagree");

  const auto candidates = undecided_attacks(af);
  if (candidates != candidate_edges(grounded)) mismatch("candidate edges differ");
  for (const auto& s : stable) {
    if (candidates.size() > max_oracle_candidates) {
      ++report.critical_skipped;
      continue;
    }
    ++report.critical_checked;
    for (Minimality m : {Minimality::Cardinality, Minimality::Subset}) {
      const auto expected = critical_sets_bruteforce(af, s.extension, candidates, m);
      std::vector<std::vector<AttackEdge>> got;
      try {
        CriticalSearchOptions options;
        options.minimality = m;
        for (auto& d : find_critical_sets(grounded, s, options)) got.push_back(std::move(d.edges));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NoCriticalSetFound) throw;
      }
      if (got != expected) {
        std::string g, x;
        for (const auto& d : got) g += describe(d);
        for (const auto& d : expected) x += describe(d);
        mismatch("critical sets (" + std::string(to_string(m)) + ") for " + describe(s.extension) +
                 ": engine " + g + " vs oracle " + x);
      }
    }
  }
  return report;
}

}  // namespace afprov::oracle

#include <doctest.h>

#include "afprov/critical.hpp"
#include "afprov/error.hpp"
#include "support.hpp"

using namespace afprov;
using afprov::testing::edge;
using afprov::testing::ext;
using afprov::testing::fig1;

namespace {

std::vector<std::vector<AttackEdge>> edge_sets(const std::vector<CriticalAttackSet>& sets) {
  std::vector<std::vector<AttackEdge>> out;
  for (const auto& s : sets) out.push_back(s.edges);
  return out;
}

StableSolution stable_with(const GroundedSolution& g, const ExtensionSet& s) {
  for (const auto& sol : enumerate_stable(g)) {
    if (sol.extension == s) return sol;
  }
  FAIL("not a stable extension");
  return {};
}

CriticalSearchOptions mode(Minimality m) {
  CriticalSearchOptions o;
  o.minimality = m;
  return o;
}

// Subset-minimal and cardinality-minimal families differ here.
ArgumentationFramework uneven() {
  return make_af({}, {{"A", "D"}, {"B", "C"}, {"B", "D"}, {"C", "A"}, {"D", "A"}, {"D", "B"}});
}

}  // namespace

TEST_SUITE("critical") {
  TEST_CASE("four-argument example in both modes") {
    const auto g = solve_grounded(fig1());
    const auto s_ac = stable_with(g, ext({"A", "C"}));
    const auto s_ad = stable_with(g, ext({"A", "D"}));
    for (auto m : {Minimality::Cardinality, Minimality::Subset}) {
      const auto for_ad = find_critical_sets(g, s_ad, mode(m));
      REQUIRE(for_ad.size() == 1);
      CHECK(for_ad[0].edges == std::vector{edge("C", "D")});
      CHECK(for_ad[0].stable_index == s_ad.index);
      CHECK(for_ad[0].delta_index == 1);
      CHECK(for_ad[0].minimality == m);
      const auto for_ac = find_critical_sets(g, s_ac, mode(m));
      REQUIRE(for_ac.size() == 1);
      CHECK(for_ac[0].edges == std::vector{edge("D", "C")});
    }
  }

  TEST_CASE("candidate policies") {
    const auto g = solve_grounded(fig1());
    CHECK(candidate_edges(g) == std::vector{edge("C", "D"), edge("D", "C")});
    CHECK(candidate_edges(g, CandidatePolicy::Widened) ==
          std::vector{edge("B", "C"), edge("C", "D"), edge("D", "C")});
  }

  TEST_CASE("widened candidates give the same minimal sets here") {
    const auto g = solve_grounded(fig1());
    auto o = mode(Minimality::Subset);
    o.candidates = CandidatePolicy::Widened;
    const auto got = find_critical_sets(g, stable_with(g, ext({"A", "D"})), o);
    CHECK(edge_sets(got) == std::vector<std::vector<AttackEdge>>{{edge("C", "D")}});
  }

  TEST_CASE("cardinality keeps only the smallest") {
    const auto g = solve_grounded(uneven());
    const auto s = stable_with(g, ext({"A", "B"}));
    CHECK(edge_sets(find_critical_sets(g, s, mode(Minimality::Cardinality))) ==
          std::vector<std::vector<AttackEdge>>{{edge("D", "B")}});
    CHECK(edge_sets(find_critical_sets(g, s, mode(Minimality::Subset))) ==
          std::vector<std::vector<AttackEdge>>{{edge("C", "A"), edge("D", "A")}, {edge("D", "B")}});
  }

  TEST_CASE("several sets of the same size") {
    // A <-> B <-> C: reaching {A, C} needs either B->A or B->C gone.
    const auto g = solve_grounded(make_af({}, {{"A", "B"}, {"B", "A"}, {"B", "C"}, {"C", "B"}}));
    const auto sets = find_critical_sets(g, stable_with(g, ext({"A", "C"})));
    CHECK(edge_sets(sets) == std::vector<std::vector<AttackEdge>>{{edge("B", "A")}, {edge("B", "C")}});
    CHECK(sets[0].delta_index == 1);
    CHECK(sets[1].delta_index == 2);
  }

  TEST_CASE("two-valued grounded solution needs no removal") {
    const auto g = solve_grounded(make_af({}, {{"a", "b"}}));
    const auto sets = find_critical_sets(g, enumerate_stable(g).at(0));
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].edges.empty());
  }

  TEST_CASE("validate_delta") {
    const auto af = fig1();
    const auto g = solve_grounded(af);
    const auto s_ad = stable_with(g, ext({"A", "D"}));
    CHECK(validate_delta(af, s_ad, std::vector{edge("C", "D")}));
    CHECK_FALSE(validate_delta(af, s_ad, std::vector{edge("D", "C")}));
    CHECK_FALSE(validate_delta(af, s_ad, {}));
    try {
      validate_delta(af, s_ad, std::vector{edge("A", "D")});
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidDelta);
    }
  }

  TEST_CASE("budget guard") {
    auto pairs = [](int n) {
      std::vector<std::pair<std::string, std::string>> attacks;
      for (int i = 0; i < n; ++i) {
        const auto a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        attacks.emplace_back(a, b);
        attacks.emplace_back(b, a);
      }
      return solve_grounded(make_af({}, attacks));
    };
    const auto big = pairs(13);
    REQUIRE(candidate_edges(big).size() == 26);
    try {
      find_critical_sets(big, enumerate_stable(big).front());
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::BudgetExceeded);
    }

    const auto small = pairs(4);
    const auto s = enumerate_stable(small).front();
    CriticalSearchOptions tight;
    tight.max_candidates = 7;
    CHECK_THROWS_AS(find_critical_sets(small, s, tight), Error);
    tight.max_candidates = 8;
    const auto sets = find_critical_sets(small, s, tight);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].edges.size() == 4);
  }

  TEST_CASE("minimality names") {
    CHECK(to_string(Minimality::Subset) == "subset");
    CHECK(parse_minimality("cardinality") == Minimality::Cardinality);
    CHECK_FALSE(parse_minimality("smallest").has_value());
  }

  TEST_CASE("clingo program") {
    const auto af = fig1();
    const auto program = emit_asp_program(af, ext({"A", "D"}));
    CHECK(program.find("{critical(Y,X)} :- attacks(Y,X), undec0(Y), undec0(X).") != std::string::npos);
    CHECK(program.find("#minimize {N : critical_cnt(N)}.") != std::string::npos);
    CHECK(program.find("attacks(c,d).") != std::string::npos);
    CHECK(program.find(":- not in(d).") != std::string::npos);
    CHECK(program.find(":- in(c).") != std::string::npos);
    CHECK(program.back() == '\n');

    const auto with_isolated = emit_asp_program(make_af({"lone"}, {{"x", "y"}}), ext({"lone", "x"}));
    CHECK(with_isolated.find("arg(lone).") != std::string::npos);
    CHECK(with_isolated.find("arg(x).") == std::string::npos);

    const auto clashing = emit_asp_program(make_af({}, {{"a", "A"}}), ext({"a"}));
    CHECK(clashing.find("attacks(\"a\",\"A\").") != std::string::npos);
  }
}

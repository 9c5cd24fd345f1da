#include <doctest.h>

#include "afprov/error.hpp"
#include "afprov/semantics.hpp"
#include "support.hpp"

using namespace afprov;
using afprov::testing::ext;
using afprov::testing::fig1;

TEST_SUITE("semantics") {
  TEST_CASE("extension sets are sorted and unique") {
    auto s = ext({"C", "A", "C"});
    REQUIRE(s.size() == 2);
    CHECK(s.members()[0].str() == "A");
    CHECK(s.contains(ArgumentId("C")));
    CHECK(ext({"A"}).is_subset_of(s));
    CHECK_FALSE(s.is_subset_of(ext({"A"})));
    CHECK(ExtensionSet().is_subset_of(s));
  }

  TEST_CASE("family order is cardinality first") {
    CHECK(extension_less(ext({"Z"}), ext({"A", "B"})));
    CHECK(extension_less(ext({"A", "C"}), ext({"A", "D"})));
    CHECK_FALSE(extension_less(ext({"A"}), ext({"A"})));
    CHECK(extension_less(ExtensionSet(), ext({"A"})));
  }

  TEST_CASE("membership rejects foreign arguments") {
    try {
      membership(fig1(), ext({"A", "Q"}));
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MemberNotInAF);
    }
  }

  TEST_CASE("set predicates on the four-argument example") {
    const auto af = fig1();
    CHECK(is_conflict_free(af, ext({"A", "C"})));
    CHECK_FALSE(is_conflict_free(af, ext({"C", "D"})));
    CHECK(characteristic(af, ExtensionSet()) == ext({"A"}));
    CHECK(characteristic(af, ext({"A"})) == ext({"A"}));
    CHECK(is_admissible(af, ext({"A", "D"})));
    CHECK(is_admissible(af, ext({"D"})));
    CHECK_FALSE(is_complete(af, ext({"D"})));
    CHECK(is_complete(af, ext({"A"})));
    CHECK(is_stable(af, ext({"A", "C"})));
    CHECK(is_stable(af, ext({"A", "D"})));
    CHECK_FALSE(is_stable(af, ext({"A"})));
    CHECK(grounded_by_least_fixpoint(af) == ext({"A"}));
  }

  TEST_CASE("brute force enumeration") {
    const auto af = fig1();
    const auto complete = enumerate_bruteforce(af, Semantics::Complete);
    REQUIRE(complete.size() == 3);
    CHECK(complete[0] == ext({"A"}));
    CHECK(complete[1] == ext({"A", "C"}));
    CHECK(complete[2] == ext({"A", "D"}));
    CHECK(enumerate_bruteforce(af, Semantics::Stable).size() == 2);
    CHECK(enumerate_bruteforce(af, Semantics::ConflictFree).front().empty());
  }

  TEST_CASE("self loop and odd cycle") {
    const auto loop = make_af({"A"}, {{"A", "A"}});
    CHECK(grounded_by_least_fixpoint(loop).empty());
    CHECK(enumerate_bruteforce(loop, Semantics::Stable).empty());
    CHECK_FALSE(is_conflict_free(loop, ext({"A"})));

    const auto cycle = make_af({}, {{"A", "B"}, {"B", "C"}, {"C", "A"}});
    CHECK(enumerate_bruteforce(cycle, Semantics::Stable).empty());
    CHECK(enumerate_bruteforce(cycle, Semantics::Complete) == std::vector{ExtensionSet()});
  }

  TEST_CASE("oracle size guard") {
    std::vector<std::string> names;
    for (int i = 0; i < 21; ++i) names.push_back("a" + std::to_string(i));
    try {
      enumerate_bruteforce(make_af(names, {}), Semantics::Stable);
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::TooLargeForOracle);
    }
  }
}

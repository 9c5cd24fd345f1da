#include <doctest.h>

#include "afprov/af.hpp"
#include "afprov/error.hpp"
#include "support.hpp"

using namespace afprov;
using afprov::testing::edge;
using afprov::testing::fig1;
using afprov::testing::id;

TEST_SUITE("af") {
  TEST_CASE("argument names") {
    CHECK(ArgumentId::is_valid("A"));
    CHECK(ArgumentId::is_valid("node_17-x"));
    CHECK(ArgumentId::is_valid("\xc3\xa9t\xc3\xa9"));
    CHECK_FALSE(ArgumentId::is_valid(""));
    CHECK_FALSE(ArgumentId::is_valid("a b"));
    CHECK_FALSE(ArgumentId::is_valid("a\tb"));
    CHECK_FALSE(ArgumentId::is_valid("f(x)"));
    CHECK_FALSE(ArgumentId::is_valid("a,b"));
    CHECK_FALSE(ArgumentId::is_valid("a."));
    CHECK_FALSE(ArgumentId::is_valid(std::string("a\x7f")));
    CHECK_THROWS_AS(ArgumentId("bad name"), Error);
    try {
      ArgumentId("");
      FAIL("expected throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidToken);
    }
  }

  TEST_CASE("ids order by bytes") {
    CHECK(id("B") < id("a"));
    CHECK(id("A") < id("AA"));
    CHECK(id("a10") < id("a2"));
  }

  TEST_CASE("build sorts, deduplicates and adds endpoints") {
    auto af = make_af({"D", "B", "B"}, {{"C", "A"}, {"C", "A"}, {"A", "B"}});
    REQUIRE(af.size() == 4);
    CHECK(af.argument(0) == id("A"));
    CHECK(af.argument(3) == id("D"));
    REQUIRE(af.edge_count() == 2);
    CHECK(af.attack(0) == edge("A", "B"));
    CHECK(af.attack(1) == edge("C", "A"));
    CHECK(af.edge(1).attacker == 2);
    CHECK(af.edge(1).target == 0);
  }

  TEST_CASE("lookup and adjacency") {
    const auto af = fig1();
    CHECK(af.find("C") == 2u);
    CHECK_FALSE(af.find("Z").has_value());
    CHECK_THROWS_AS(af.index_of(id("Z")), Error);
    CHECK(af.find_edge(edge("D", "C")) == 3u);
    CHECK_FALSE(af.find_edge(edge("C", "B")).has_value());

    const auto in_c = af.incoming(2);
    REQUIRE(in_c.size() == 2);
    CHECK(af.attack(in_c[0]) == edge("B", "C"));
    CHECK(af.attack(in_c[1]) == edge("D", "C"));
    CHECK(af.incoming(0).empty());
    CHECK(af.outgoing(0).size() == 1);
    CHECK(af.outgoing(3).size() == 1);
  }

  TEST_CASE("self loops are kept") {
    auto af = make_af({"A"}, {{"A", "A"}});
    CHECK(af.edge_count() == 1);
    CHECK(af.incoming(0).size() == 1);
    CHECK(af.outgoing(0).size() == 1);
  }

  TEST_CASE("without_edges keeps every argument") {
    const auto af = fig1();
    const std::vector<AttackEdge> removed{edge("C", "D"), edge("X", "Y")};
    const auto sub = without_edges(af, removed);
    CHECK(sub.size() == 4);
    CHECK(sub.edge_count() == 3);
    CHECK_FALSE(sub.find_edge(edge("C", "D")).has_value());
    CHECK(without_edges(af, {}) == af);
  }

  TEST_CASE("empty framework") {
    const auto af = make_af({}, {});
    CHECK(af.empty());
    CHECK(af.edge_count() == 0);
  }

  TEST_CASE("labels and lengths") {
    CHECK(to_string(Label::Undec) == "undec");
    CHECK(parse_label("out") == Label::Out);
    CHECK_FALSE(parse_label("OUT").has_value());

    CHECK(Length::finite(3) < Length::infinity());
    CHECK(Length::finite(0) < Length::finite(1));
    CHECK(Length::infinity() == Length());
    CHECK(Length::infinity().to_string() == "inf");
    CHECK(Length::finite(12).to_string() == "12");

    Labeling l({Label::In, Label::Out, Label::Undec, Label::Out});
    CHECK(l.count(Label::Out) == 2);
    CHECK_FALSE(l.is_two_valued());
    CHECK(Labeling({Label::In, Label::Out}).is_two_valued());
  }

  TEST_CASE("edge type names round-trip") {
    for (auto t : {EdgeType::SuccessfulPrimary, EdgeType::SuccessfulSecondary, EdgeType::Failed,
                   EdgeType::Undecided, EdgeType::BlunderB1, EdgeType::BlunderB2,
                   EdgeType::BlunderB3, EdgeType::Critical}) {
      CHECK(parse_edge_type(to_string(t)) == t);
    }
    CHECK(is_blunder(EdgeType::BlunderB2));
    CHECK_FALSE(is_blunder(EdgeType::Failed));
    CHECK_FALSE(parse_edge_type("blunder").has_value());
  }
}

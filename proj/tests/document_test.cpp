#include <doctest.h>

#include <random>

#include "afprov/document.hpp"
#include "afprov/error.hpp"
#include "afprov/json_codec.hpp"
#include "afprov/oracle.hpp"
#include "support.hpp"

using namespace afprov;
using afprov::testing::fig1;

namespace {

AnalysisOptions everything(Minimality m = Minimality::Cardinality) {
  AnalysisOptions o;
  o.critical = m;
  o.overlays = true;
  o.layouts = true;
  return o;
}

ErrorCode schema_failure(std::string_view text) {
  try {
    parse_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a schema error");
  return ErrorCode::InvalidToken;
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("analysis of the four-argument example") {
    const auto doc = analyze(fig1(), everything());
    CHECK(doc.stable_solutions.size() == 2);
    REQUIRE(doc.critical_sets.size() == 2);
    CHECK(doc.overlays.size() == 2);
    CHECK(doc.layouts.size() == 3);
    CHECK_FALSE(doc.layouts[0].overlay.has_value());
    CHECK(key_of(doc.overlays[1]) == OverlayKey{2, 1, Minimality::Cardinality});
    CHECK(*doc.layouts[2].overlay == key_of(doc.overlays[1]));
  }

  TEST_CASE("analysis options trim sections") {
    AnalysisOptions only_grounded;
    only_grounded.stable = false;
    const auto doc = analyze(fig1(), only_grounded);
    CHECK(doc.stable_solutions.empty());
    CHECK(doc.layouts.empty());
    CHECK(analyze(fig1(), {}).critical_sets.empty());
  }

  TEST_CASE("canonical json") {
    const auto text = export_json(analyze(fig1(), everything()));
    CHECK(text.back() == '\n');
    CHECK(text.find('\n') == text.size() - 1);
    CHECK(text.rfind("{\"af\":{\"arguments\":[\"A\",\"B\",\"C\",\"D\"]", 0) == 0);
    CHECK(text.find("\"schema\":\"af-prov/1\"") != std::string::npos);
    CHECK(text.find("\"lengths\":{\"A\":0,\"B\":1,\"C\":\"inf\",\"D\":\"inf\"}") != std::string::npos);
    CHECK(text == export_json(analyze(fig1(), everything())));
  }

  TEST_CASE("round trip") {
    for (auto m : {Minimality::Cardinality, Minimality::Subset}) {
      const auto doc = analyze(fig1(), everything(m));
      const auto text = export_json(doc);
      const auto back = parse_document(text);
      CHECK(back == doc);
      CHECK(export_json(back) == text);
    }
  }

  TEST_CASE("round trip over random frameworks") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 40; ++k) {
      const auto af = oracle::random_af(rng);
      AnalysisOptions o = everything();
      if (oracle::undecided_attacks(af).size() > 12) o.critical.reset(), o.overlays = false;
      const auto doc = analyze(af, o);
      CHECK(parse_document(export_json(doc)) == doc);
    }
  }

  TEST_CASE("framework-only inputs") {
    const auto af = fig1();
    const std::string bare = R"({"arguments":["A","B","C","D"],"attacks":[["A","B"],["B","C"],["C","D"],["D","C"]]})";
    CHECK(parse_af_json(bare) == af);
    CHECK(parse_af_json(R"({"af":)" + bare + "}") == af);
    CHECK(parse_af_json(export_json(analyze(af, everything()))) == af);
    CHECK(parse_af_json(R"({"attacks":[["x","y"]]})").size() == 2);
  }

  TEST_CASE("schema errors") {
    CHECK(schema_failure("{") == ErrorCode::SchemaError);
    CHECK(schema_failure("[]") == ErrorCode::SchemaError);
    CHECK(schema_failure(R"({"schema":"af-prov/9","af":{"arguments":[],"attacks":[]}})") == ErrorCode::SchemaError);
    CHECK(schema_failure(R"({"schema":"af-prov/1"})") == ErrorCode::SchemaError);
    CHECK_THROWS_AS(parse_af_json(R"({"arguments":[1]})"), Error);
    CHECK_THROWS_AS(parse_af_json(R"({"arguments":["A"],"attacks":[["A"]]})"), Error);
    CHECK_THROWS_AS(parse_af_json(R"({"arguments":["a b"]})"), Error);
  }

  TEST_CASE("tampered documents are rejected") {
    auto text = export_json(analyze(fig1(), everything()));
    const auto pos = text.find("\"B\":\"out\"");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 9, "\"B\":\"in\" ");
    CHECK_THROWS_AS(parse_document(text), Error);
  }

  TEST_CASE("edge json") {
    CHECK(json::edge_json({ArgumentId("a"), ArgumentId("b")}).dump() == R"(["a","b"])");
    CHECK(json::edges_from_json(json::Json::parse(R"([["a","b"]])")).size() == 1);
  }
}

#include <doctest.h>
#include <httplib.h>

#include <thread>

#include "afprov/json_codec.hpp"
#include "afprov/server.hpp"
#include "support.hpp"

using namespace afprov::server;
using afprov::testing::data_path;
using afprov::testing::read_file;
using nlohmann::json;

namespace {

struct Client {
  ApiService& service;

  ApiResponse operator()(const std::string& method, const std::string& path, std::string body = "",
                         std::map<std::string, std::string> query = {}) {
    return service.handle({method, path, std::move(query), std::move(body)});
  }

  std::string open(const std::string& body, std::map<std::string, std::string> query = {}) {
    auto r = (*this)("POST", "/sessions", body, std::move(query));
    REQUIRE(r.status == 201);
    return json::parse(r.body)["id"].get<std::string>();
  }
};

std::string error_code(const ApiResponse& r) { return json::parse(r.body)["error"]["code"].get<std::string>(); }

const std::string kFig1Json =
    R"({"arguments":["A","B","C","D"],"attacks":[["A","B"],["B","C"],["C","D"],["D","C"]]})";

}  // namespace

TEST_SUITE("api") {
  TEST_CASE("health") {
    ApiService service;
    auto r = service.handle({"GET", "/healthz", {}, ""});
    CHECK(r.status == 200);
    CHECK(r.body == "ok");
    CHECK(r.content_type == "text/plain");
  }

  TEST_CASE("upload formats") {
    ApiService service;
    Client c{service};
    const auto apx = read_file(data_path("fig1.apx"));
    const auto ids = std::vector{
        c.open(apx),
        c.open(read_file(data_path("fig1.tgf")), {{"format", "tgf"}}),
        c.open(kFig1Json),
        c.open(R"({"af":)" + kFig1Json + "}"),
        c.open(json({{"format", "apx"}, {"text", apx}}).dump()),
    };
    CHECK(service.session_count() == 5);
    const auto first = c("GET", "/sessions/" + ids[0] + "/grounded").body;
    for (const auto& id : ids) CHECK(c("GET", "/sessions/" + id + "/grounded").body == first);
    CHECK(ids[0] != ids[1]);
  }

  TEST_CASE("grounded and stable endpoints") {
    ApiService service;
    Client c{service};
    const auto id = c.open(kFig1Json);
    const auto g = json::parse(c("GET", "/sessions/" + id + "/grounded").body);
    CHECK(g["schema"] == "af-prov/1");
    CHECK(g["grounded"]["labels"]["A"] == "in");
    CHECK(g["layout"]["undec_band"] == json::array({"C", "D"}));

    const auto s = c("GET", "/sessions/" + id + "/stable");
    CHECK(s.status == 200);
    CHECK(json::parse(s.body)["stable_solutions"].size() == 2);
  }

  TEST_CASE("critical sets and overlays") {
    ApiService service;
    Client c{service};
    const auto id = c.open(kFig1Json);
    const auto crit = c("GET", "/sessions/" + id + "/stable/2/critical", "", {{"minimality", "subset"}});
    REQUIRE(crit.status == 200);
    const auto family = json::parse(crit.body)["critical_set"];
    CHECK(family["minimality"] == "subset");
    CHECK(family["deltas"][0]["edges"][0] == json::array({"C", "D"}));

    const auto ov = c("GET", "/sessions/" + id + "/overlay/2/1", "", {{"layout", "true"}});
    REQUIRE(ov.status == 200);
    const auto j = json::parse(ov.body);
    CHECK(j["overlay"]["nodes"]["D"]["effective"] == "in_primed");
    CHECK(j["layout"]["layers"][0]["nodes"] == json::array({"A", "D"}));
    CHECK_FALSE(json::parse(c("GET", "/sessions/" + id + "/overlay/2/1").body).contains("layout"));
  }

  TEST_CASE("suspension matches the overlay") {
    ApiService service;
    Client c{service};
    const auto id = c.open(kFig1Json);
    const auto r = c("POST", "/sessions/" + id + "/suspend", R"({"edges":[["C","D"]]})");
    REQUIRE(r.status == 200);
    const auto j = json::parse(r.body);
    CHECK(j["grounded"]["labels"]["D"] == "in");
    CHECK(j["grounded"]["labels"]["C"] == "out");
    CHECK(j["suspended"] == json::array({json::array({"C", "D"})}));

    const auto ov = json::parse(c("GET", "/sessions/" + id + "/overlay/2/1").body)["overlay"];
    for (const auto& name : {"A", "B", "C", "D"}) {
      const std::string effective = ov["nodes"][name]["effective"];
      CHECK(effective.substr(0, effective.find('_')) == j["grounded"]["labels"][name]);
      CHECK(ov["nodes"][name]["effective_length"] == j["grounded"]["lengths"][name]);
    }
  }

  TEST_CASE("suspending too little leaves the cycle undecided") {
    ApiService service;
    Client c{service};
    const auto id = c.open(kFig1Json);
    auto j = json::parse(c("POST", "/sessions/" + id + "/suspend", R"({"edges":[["B","C"]]})").body);
    CHECK(j["grounded"]["labels"]["C"] == "undec");
    CHECK(j["grounded"]["labels"]["D"] == "undec");
    j = json::parse(c("POST", "/sessions/" + id + "/suspend", R"({"edges":[]})").body);
    CHECK(j["grounded"] == json::parse(c("GET", "/sessions/" + id + "/grounded").body)["grounded"]);
  }

  TEST_CASE("responses are byte-identical across sessions and repeats") {
    ApiService service;
    Client c{service};
    const auto a = c.open(kFig1Json), b = c.open(read_file(data_path("fig1.apx")));
    for (const std::string tail : {"/grounded", "/stable", "/stable/1/critical", "/overlay/1/1"}) {
      const auto first = c("GET", "/sessions/" + a + tail).body;
      CHECK(c("GET", "/sessions/" + a + tail).body == first);
      CHECK(c("GET", "/sessions/" + b + tail).body == first);
    }
    const auto s1 = c("POST", "/sessions/" + a + "/suspend", R"({"edges":[["D","C"]]})").body;
    CHECK(c("POST", "/sessions/" + b + "/suspend", R"({"edges":[["D","C"],["D","C"]]})").body == s1);
  }

  TEST_CASE("errors") {
    ApiService service;
    Client c{service};
    CHECK(c("POST", "/sessions", "arg(a").status == 400);
    CHECK(error_code(c("POST", "/sessions", "arg(a")) == "syntax_error");
    CHECK(c("POST", "/sessions", R"({"arguments":[3]})").status == 400);
    CHECK(c("GET", "/sessions/nope/grounded").status == 404);
    CHECK(error_code(c("GET", "/sessions/nope/grounded")) == "unknown_session");
    CHECK(c("GET", "/nothing").status == 404);

    const auto id = c.open(kFig1Json);
    CHECK(c("GET", "/sessions/" + id + "/stable/3/critical").status == 404);
    CHECK(c("GET", "/sessions/" + id + "/stable/0/critical").status == 404);
    CHECK(c("GET", "/sessions/" + id + "/stable/x/critical").status == 404);
    CHECK(c("GET", "/sessions/" + id + "/overlay/1/2").status == 404);
    CHECK(c("GET", "/sessions/" + id + "/stable/1/critical", "", {{"minimality", "least"}}).status == 400);
    CHECK(c("POST", "/sessions/" + id + "/suspend", "[]").status == 400);
    const auto foreign = c("POST", "/sessions/" + id + "/suspend", R"({"edges":[["A","D"]]})");
    CHECK(foreign.status == 400);
    CHECK(error_code(foreign) == "invalid_delta");
  }

  TEST_CASE("budget exceeded is a conflict") {
    ServiceOptions options;
    options.max_candidates = 1;
    ApiService service(options);
    Client c{service};
    const auto id = c.open(kFig1Json);
    const auto r = c("GET", "/sessions/" + id + "/stable/1/critical");
    CHECK(r.status == 409);
    CHECK(error_code(r) == "budget_exceeded");
    CHECK(c("GET", "/sessions/" + id + "/overlay/1/1").status == 409);
  }

  TEST_CASE("delete and expiry") {
    auto now = ApiService::Clock::time_point{};
    ServiceOptions options;
    options.session_ttl = std::chrono::seconds(60);
    ApiService service(options, [&] { return now; });
    Client c{service};
    const auto id = c.open(kFig1Json);
    const auto other = c.open(kFig1Json);
    CHECK(c("DELETE", "/sessions/" + id).status == 204);
    CHECK(c("DELETE", "/sessions/" + id).status == 404);
    CHECK(c("GET", "/sessions/" + id + "/grounded").status == 404);

    now += std::chrono::seconds(59);
    CHECK(c("GET", "/sessions/" + other + "/stable").status == 200);
    now += std::chrono::seconds(59);
    CHECK(c("GET", "/sessions/" + other + "/stable").status == 200);
    now += std::chrono::seconds(61);
    CHECK(c("GET", "/sessions/" + other + "/stable").status == 404);
    CHECK(service.session_count() == 0);
  }

  TEST_CASE("http round trip") {
    ApiService service;
    HttpServer server(service, {"127.0.0.1", 0, "*", ""});
    const int port = server.bind();
    REQUIRE(port > 0);
    std::thread loop([&] { server.listen(); });

    httplib::Client client("127.0.0.1", port);
    client.set_connection_timeout(5);
    auto health = client.Get("/healthz");
    for (int tries = 0; !health && tries < 50; ++tries) {
      std::this_thread::sleep_for(std::chrono::milliseconds(20));
      health = client.Get("/healthz");
    }
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(health->body == "ok");
    CHECK(health->get_header_value("Access-Control-Allow-Origin") == "*");

    auto created = client.Post("/sessions", read_file(data_path("fig1.apx")), "text/plain");
    REQUIRE(created);
    CHECK(created->status == 201);
    const auto id = json::parse(created->body)["id"].get<std::string>();

    auto stable = client.Get("/sessions/" + id + "/stable");
    REQUIRE(stable);
    CHECK(json::parse(stable->body)["stable_solutions"].size() == 2);

    auto ov = client.Get("/sessions/" + id + "/stable/1/critical?minimality=subset");
    REQUIRE(ov);
    CHECK(json::parse(ov->body)["critical_set"]["minimality"] == "subset");

    auto suspended = client.Post("/sessions/" + id + "/suspend", R"({"edges":[["C","D"]]})", "application/json");
    REQUIRE(suspended);
    CHECK(json::parse(suspended->body)["grounded"]["labels"]["D"] == "in");

    auto preflight = client.Options("/sessions");
    REQUIRE(preflight);
    CHECK(preflight->status == 204);

    auto gone = client.Delete("/sessions/" + id);
    REQUIRE(gone);
    CHECK(gone->status == 204);

    server.stop();
    loop.join();
  }
}

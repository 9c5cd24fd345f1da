#include "afprov/server.hpp"

#include <httplib.h>

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

#include "afprov/document.hpp"
#include "afprov/error.hpp"
#include "afprov/formats.hpp"
#include "afprov/json_codec.hpp"
#include "afprov/layout.hpp"
#include "afprov/overlay.hpp"
#include "afprov/stable.hpp"

namespace afprov::server {

using json::Json;

struct Session {
  std::mutex mutex;
  ArgumentationFramework af;
  ApiService::Clock::time_point last_access;

  // Caches; reset whenever af or suspended changes.
  std::optional<GroundedSolution> grounded;
  std::optional<std::vector<StableSolution>> stable;
  std::map<std::pair<std::size_t, Minimality>, std::vector<CriticalAttackSet>> critical;
  std::vector<AttackEdge> suspended;
  std::optional<std::string> suspended_response;

  const GroundedSolution& grounded_solution() {
    if (!grounded) grounded = solve_grounded(af);
    return *grounded;
  }
  const std::vector<StableSolution>& stable_solutions() {
    if (!stable) stable = enumerate_stable(grounded_solution());
    return *stable;
  }
};

namespace {

ApiResponse json_response(int status, const Json& body) { return {status, json::dump(body)}; }

ApiResponse error_response(int status, std::string_view code, const std::string& message) {
  return json_response(status, {{"error", {{"code", std::string(code)}, {"message", message}}}});
}

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::NoCriticalSetFound: return 409;
    case ErrorCode::UnknownArgument: return 404;
    default: return 400;
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::stringstream ss(path);
  std::string item;
  while (std::getline(ss, item, '/')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::optional<std::size_t> parse_index(const std::string& s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  std::size_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

Json with_schema(Json j) {
  j["schema"] = std::string(kSchemaVersion);
  return j;
}

ArgumentationFramework af_from_body(const ApiRequest& req) {
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded()) {
    auto fmt = req.query.count("format") ? parse_input_format(req.query.at("format"))
                                         : std::optional(InputFormat::Apx);
    if (!fmt || *fmt == InputFormat::Json) {
      throw Error(ErrorCode::SchemaError, "body is neither JSON nor a supported text format");
    }
    return *fmt == InputFormat::Apx ? parse_apx(req.body) : parse_tgf(req.body);
  }
  if (j.is_object() && j.contains("text")) {
    const auto fmt = j.contains("format") && j["format"].is_string()
                         ? parse_input_format(j["format"].get<std::string>())
                         : std::optional(InputFormat::Apx);
    if (!fmt || *fmt == InputFormat::Json || !j["text"].is_string()) {
      throw Error(ErrorCode::SchemaError, "expected {\"format\": \"apx\"|\"tgf\", \"text\": ...}");
    }
    const auto text = j["text"].get<std::string>();
    return *fmt == InputFormat::Apx ? parse_apx(text) : parse_tgf(text);
  }
  if (j.is_object() && j.contains("schema")) return json::document_from_json(j).af;
  if (j.is_object() && j.contains("af")) return json::af_from_json(j["af"]);
  return json::af_from_json(j);
}

}  // namespace

ApiService::ApiService(ServiceOptions options, std::function<Clock::time_point()> now)
    : options_(options), now_(std::move(now)), id_rng_(std::random_device{}()) {}

ApiService::~ApiService() = default;

std::size_t ApiService::session_count() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void ApiService::evict_expired() {
  const auto now = now_();
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock session_lock(it->second->mutex, std::try_to_lock);
    if (session_lock.owns_lock() && now - it->second->last_access > options_.session_ttl) {
      session_lock.unlock();
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::string ApiService::new_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  while (true) {
    const std::uint64_t bits = id_rng_();
    std::string id;
    for (int i = 0; i < 16; ++i) id += kHex[(bits >> (4 * i)) & 0xF];
    if (!sessions_.count(id)) return id;
  }
}

std::shared_ptr<Session> ApiService::lookup(const std::string& id) {
  std::lock_guard lock(mutex_);
  evict_expired();
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

ApiResponse ApiService::create_session(const ApiRequest& request) {
  auto session = std::make_shared<Session>();
  session->af = af_from_body(request);
  session->last_access = now_();
  std::lock_guard lock(mutex_);
  evict_expired();
  const auto id = new_id();
  sessions_[id] = session;
  return json_response(201, {{"id", id},
                             {"arguments", session->af.size()},
                             {"attacks", session->af.edge_count()}});
}

ApiResponse ApiService::handle(const ApiRequest& req) {
  try {
    const auto parts = split_path(req.path);
    if (parts.size() == 1 && parts[0] == "healthz" && req.method == "GET") {
      return {200, "ok", "text/plain"};
    }
    if (parts.empty() || parts[0] != "sessions") {
      return error_response(404, "not_found", "no such endpoint");
    }
    if (parts.size() == 1) {
      if (req.method != "POST") return error_response(405, "method_not_allowed", "use POST");
      return create_session(req);
    }

    if (req.method == "DELETE" && parts.size() == 2) {
      std::lock_guard lock(mutex_);
      if (!sessions_.erase(parts[1])) return error_response(404, "unknown_session", "no such session");
      return {204, "", "application/json"};
    }

    auto session = lookup(parts[1]);
    if (!session) return error_response(404, "unknown_session", "no such session");
    std::lock_guard session_lock(session->mutex);
    session->last_access = now_();

    auto minimality_param = [&]() -> std::optional<Minimality> {
      auto it = req.query.find("minimality");
      if (it == req.query.end()) return Minimality::Cardinality;
      return parse_minimality(it->second);
    };
    auto stable_at = [&](const std::string& text) -> const StableSolution* {
      auto i = parse_index(text);
      const auto& all = session->stable_solutions();
      if (!i || *i == 0 || *i > all.size()) return nullptr;
      return &all[*i - 1];
    };
    auto critical_for = [&](const StableSolution& s, Minimality m) -> const std::vector<CriticalAttackSet>& {
      auto key = std::pair(s.index, m);
      auto it = session->critical.find(key);
      if (it == session->critical.end()) {
        CriticalSearchOptions options;
        options.minimality = m;
        options.max_candidates = options_.max_candidates;
        it = session->critical.emplace(key, find_critical_sets(session->grounded_solution(), s, options)).first;
      }
      return it->second;
    };

    const std::string& what = parts.size() > 2 ? parts[2] : std::string();
    if (req.method == "GET" && parts.size() == 3 && what == "grounded") {
      const auto& g = session->grounded_solution();
      return json_response(200, with_schema({{"af", json::to_json(session->af)},
                                             {"grounded", json::to_json(g)},
                                             {"layout", json::to_json(layout_grounded(g))}}));
    }
    if (req.method == "GET" && parts.size() == 3 && what == "stable") {
      Json list = Json::array();
      for (const auto& s : session->stable_solutions()) list.push_back(json::to_json(s));
      return json_response(200, with_schema({{"stable_solutions", list}}));
    }
    if (req.method == "GET" && parts.size() == 5 && what == "stable" && parts[4] == "critical") {
      const auto* s = stable_at(parts[3]);
      if (!s) return error_response(404, "unknown_stable_index", "no stable solution " + parts[3]);
      auto m = minimality_param();
      if (!m) return error_response(400, "bad_minimality", "minimality must be cardinality or subset");
      CriticalSetFamily family{s->index, *m, critical_for(*s, *m)};
      return json_response(200, with_schema({{"critical_set", json::to_json(family)}}));
    }
    if (req.method == "GET" && parts.size() == 5 && what == "overlay") {
      const auto* s = stable_at(parts[3]);
      if (!s) return error_response(404, "unknown_stable_index", "no stable solution " + parts[3]);
      auto m = minimality_param();
      if (!m) return error_response(400, "bad_minimality", "minimality must be cardinality or subset");
      const auto& deltas = critical_for(*s, *m);
      auto j = parse_index(parts[4]);
      if (!j || *j == 0 || *j > deltas.size()) {
        return error_response(404, "unknown_delta_index", "no critical set " + parts[4]);
      }
      const auto ov = build_overlay(session->grounded_solution(), *s, deltas[*j - 1]);
      Json body = with_schema({{"overlay", json::to_json(ov)}});
      auto layout = req.query.find("layout");
      if (layout != req.query.end() && (layout->second == "true" || layout->second == "1")) {
        body["layout"] = json::to_json(layout_overlay(ov));
      }
      return json_response(200, body);
    }
    if (req.method == "POST" && parts.size() == 3 && what == "suspend") {
      Json body = Json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.is_object() || !body.contains("edges")) {
        return error_response(400, "schema_error", "expected {\"edges\": [[attacker, target], ...]}");
      }
      auto edges = json::edges_from_json(body["edges"]);
      for (const auto& e : edges) {
        if (!session->af.find_edge(e)) {
          return error_response(400, "invalid_delta",
                                "attack " + e.attacker.str() + "->" + e.target.str() + " is not in the framework");
        }
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      if (edges != session->suspended || !session->suspended_response) {
        session->suspended = std::move(edges);
        const auto modified = without_edges(session->af, session->suspended);
        const auto g = solve_grounded(modified);
        Json suspended = Json::array();
        for (const auto& e : session->suspended) suspended.push_back(json::edge_json(e));
        session->suspended_response = json::dump(with_schema({{"suspended", suspended},
                                                              {"af", json::to_json(modified)},
                                                              {"grounded", json::to_json(g)},
                                                              {"layout", json::to_json(layout_grounded(g))}}));
      }
      return {200, *session->suspended_response};
    }
    return error_response(404, "not_found", "no such endpoint");
  } catch (const Error& e) {
    return error_response(status_for(e.code()), to_string(e.code()), e.what());
  } catch (const Json::exception& e) {
    return error_response(400, "schema_error", e.what());
  }
}

struct HttpServer::Impl {
  Impl(ApiService& s, HttpOptions o) : service(s), options(std::move(o)) {}
  ApiService& service;
  HttpOptions options;
  httplib::Server server;
  bool bound = false;
};

HttpServer::HttpServer(ApiService& service, HttpOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
  auto& svr = impl_->server;
  const std::string origin = impl_->options.cors_origin;
  svr.set_default_headers({{"Access-Control-Allow-Origin", origin},
                           {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  if (!impl_->options.static_dir.empty()) svr.set_mount_point("/", impl_->options.static_dir);

  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest api{req.method, req.path, {}, req.body};
    for (const auto& [k, v] : req.params) api.query.emplace(k, v);
    auto out = impl_->service.handle(api);
    res.status = out.status;
    if (out.status != 204) res.set_content(out.body, out.content_type);
  };
  svr.Get(".*", forward);
  svr.Post(".*", forward);
  svr.Delete(".*", forward);
  svr.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& o = impl_->options;
  int port = -1;
  if (o.port == 0) {
    port = impl_->server.bind_to_any_port(o.host);
  } else if (impl_->server.bind_to_port(o.host, o.port)) {
    port = o.port;
  }
  impl_->bound = port > 0;
  return port;
}

bool HttpServer::listen() {
  if (!impl_->bound && bind() < 0) return false;
  return impl_->server.listen_after_bind();
}

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace afprov::server

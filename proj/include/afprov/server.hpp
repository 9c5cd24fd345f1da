#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "afprov/critical.hpp"

namespace afprov::server {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

struct ServiceOptions {
  std::chrono::seconds session_ttl{3600};
  std::size_t max_candidates = kDefaultCandidateBudget;
};

struct Session;

/// Request handling for the explorer endpoints, independent of the socket
/// layer. Sessions live in memory and expire after `session_ttl` without
/// access. Requests on one session are serialized; distinct sessions proceed
/// concurrently.
class ApiService {
 public:
  using Clock = std::chrono::steady_clock;

  explicit ApiService(ServiceOptions options = {},
                      std::function<Clock::time_point()> now = Clock::now);
  ~ApiService();

  ApiService(const ApiService&) = delete;
  ApiService& operator=(const ApiService&) = delete;

  ApiResponse handle(const ApiRequest& request);

  std::size_t session_count() const;

 private:
  ApiResponse create_session(const ApiRequest& request);
  std::shared_ptr<Session> lookup(const std::string& id);
  std::string new_id();
  void evict_expired();

  ServiceOptions options_;
  std::function<Clock::time_point()> now_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mt19937_64 id_rng_;
};

struct HttpOptions {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string cors_origin = "*";
  std::string static_dir;  // explorer UI assets, optional
};

class HttpServer {
 public:
  HttpServer(ApiService& service, HttpOptions options);
  ~HttpServer();

  /// Binds the configured port, or any free port when options.port == 0.
  /// Returns the bound port, or -1 on failure.
  int bind();
  /// Blocks until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace afprov::server

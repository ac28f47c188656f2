#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

#include "pf/problem.hpp"
#include "pf/store.hpp"

namespace pf::api {

// Wire serialization shared by the HTTP service and the CLI's --format json.
// Rationals travel as strings ("k" or "p/q"), undefined as null.
nlohmann::json value_json(const InvariantValue& v);
nlohmann::json rational_json(const Rational& r);
nlohmann::json registry_json();
nlohmann::json polytope_json(const Store& store, const ProblemSpec& spec);
nlohmann::json graphs_json(const Store& store, const ProblemSpec& spec,
                           std::span<const Point2> coords);
nlohmann::json invariants_json(const Store& store, std::string_view signature,
                               std::span<const std::string> ids);

/// Compact dump plus a trailing newline; the exact bytes of every JSON body.
std::string body(const nlohmann::json& j);

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// Stateless request handlers over a read-only store. Errors come back as
/// {"error", "detail"} bodies: 400 malformed input, 404 unbuilt corpus or
/// column, 422 unknown id or kind mismatch.
class Service {
 public:
  explicit Service(const Store& store) : store_(store) {}

  Response invariants() const;
  Response polytope(std::string_view problem) const;
  /// Body: {"problem": "<encoding>", "coordinates": [["x", "y"], ...],
  ///        "extra_invariants": [...]}.
  Response graphs(std::string_view request_body) const;
  Response graph_invariants(std::string_view signature,
                            std::optional<std::string_view> ids) const;
  Response export_g6(std::string_view problem) const;
  Response docs() const;

 private:
  const Store& store_;
};

/// HTTP/1.1 front end for Service.
class HttpServer {
 public:
  HttpServer(const Store& store, std::string cors_origin = "*");
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds (port 0 picks a free port) and serves on a background thread.
  /// Returns the bound port.
  int start(const std::string& host, int port);
  /// Binds and serves on the calling thread until stop().
  bool listen(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

constexpr int kDefaultPort = 8711;
/// PF_PORT or kDefaultPort.
int default_port();

}  // namespace pf::api

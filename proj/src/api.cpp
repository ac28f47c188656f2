#include "pf/api.hpp"

#include <cstdlib>
#include <limits>
#include <thread>

#include "httplib.h"

#include "pf/errors.hpp"
#include "pf/polytope.hpp"

namespace pf::api {

using nlohmann::json;

namespace {

json integer_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Response json_response(const json& j, int status = 200) { return {status, "application/json", body(j)}; }

Response error_response(int status, std::string_view code, const std::string& detail) {
  return json_response(json{{"error", code}, {"detail", detail}}, status);
}

template <typename F>
Response guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const NotFoundError& e) {
    return error_response(404, "not_found", e.what());
  } catch (const DomainError& e) {
    return error_response(422, "unprocessable", e.what());
  } catch (const json::exception& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

Rational coordinate(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("coordinates must be rational strings or integers");
}

std::vector<std::string> split_ids(std::string_view list) {
  std::vector<std::string> ids;
  while (!list.empty()) {
    auto comma = list.find(',');
    auto item = list.substr(0, comma);
    if (!item.empty()) ids.emplace_back(item);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return ids;
}

constexpr std::string_view kDocs = R"(polyfacet HTTP API

All rationals are strings "k" or "p/q"; undefined values are null.
A problem is the URL-safe base64 (no padding) of its canonical JSON:
  {"class":"all","coloration":ID?,"constraints":[{"invariant":ID,"op":OP,"target":"V"?}],
   "extra_invariants":[ID]?,"highlight":{"invariant":ID,"target":"V"|bool}?,
   "order":N,"x":ID,"y":ID}
  OP is one of le ge eq lt gt (numeric) or is_true is_false (boolean).

GET  /api/invariants
     [{"id","display_name","kind","domain"}]
GET  /api/polytope?problem=P
     {"points":[{"x","y","multiplicity","color"?,"highlight"}],
      "hull":{"shape","vertices":[{"x","y"}],"facets":[{"a","b","c","incident":[i]}]},
      "meta":{"point_count","vertex_count","graph_count","dropped_undefined"}}
POST /api/graphs   {"problem":P,"coordinates":[["x","y"]],"extra_invariants":[ID]?}
     [{"signature","values":{ID:value}}]
GET  /api/graph/{signature}/invariants?ids=a,b,c
     {ID:value}; every registry id when ids is omitted
GET  /api/export.g6?problem=P
     text/plain, one graph6 signature per line, corpus order
GET  /api/docs
     this page

Errors: {"error","detail"} with 400 (malformed), 404 (not built), 422 (unknown id, kind mismatch).
)";

}  // namespace

std::string body(const json& j) { return j.dump() + "\n"; }

json rational_json(const Rational& r) {
  if (!r.defined()) return nullptr;
  return r.str();
}

json value_json(const InvariantValue& v) {
  if (auto* b = std::get_if<bool>(&v)) return *b;
  if (auto* r = std::get_if<Rational>(&v)) return rational_json(*r);
  return nullptr;
}

json registry_json() {
  json out = json::array();
  for (const auto& d : registry())
    out.push_back({{"id", d.id},
                   {"display_name", d.display_name},
                   {"kind", std::string(to_string(d.kind))},
                   {"domain", std::string(to_string(d.domain))}});
  return out;
}

json polytope_json(const Store& store, const ProblemSpec& spec) {
  QueryResult result = store.query(spec);
  std::vector<PointRow> rows;
  rows.reserve(result.rows.size());
  for (auto& r : result.rows) rows.push_back({r.x, r.y, r.color, r.highlight});
  auto points = collect_points(rows);

  json pj = json::array();
  for (const auto& p : points) {
    json o = {{"x", p.point.x.str()},
              {"y", p.point.y.str()},
              {"multiplicity", p.multiplicity},
              {"highlight", std::string(to_string(p.highlight))}};
    if (spec.coloration)
      o["color"] = p.color.tag == PointColor::Tag::mixed ? json("mixed") : value_json(p.color.value);
    pj.push_back(std::move(o));
  }

  json hull = {{"shape", nullptr}, {"vertices", json::array()}, {"facets", json::array()}};
  std::size_t vertex_count = 0;
  if (!points.empty()) {
    std::vector<Point2> pts;
    for (const auto& p : points) pts.push_back(p.point);
    Hull h = convex_hull(pts);
    vertex_count = h.vertices.size();
    hull["shape"] = std::string(to_string(h.shape));
    for (const auto& v : h.vertices) hull["vertices"].push_back({{"x", v.x.str()}, {"y", v.y.str()}});
    for (const auto& f : facets(h)) {
      json incident = json::array();
      for (std::size_t i = 0; i < points.size(); ++i)
        if (on_facet(f, points[i].point)) incident.push_back(i);
      hull["facets"].push_back(
          {{"a", integer_json(f.a)}, {"b", integer_json(f.b)}, {"c", integer_json(f.c)},
           {"incident", std::move(incident)}});
    }
  }

  std::uint64_t graph_count = 0;
  for (const auto& p : points) graph_count += p.multiplicity;
  return {{"points", std::move(pj)},
          {"hull", std::move(hull)},
          {"meta",
           {{"point_count", points.size()},
            {"vertex_count", vertex_count},
            {"graph_count", graph_count},
            {"dropped_undefined", result.dropped_undefined}}}};
}

json graphs_json(const Store& store, const ProblemSpec& spec, std::span<const Point2> coords) {
  json out = json::array();
  for (const auto& rec : store.graphs_at(spec, coords)) {
    json values = json::object();
    for (const auto& [id, v] : rec.values) values[id] = value_json(v);
    out.push_back({{"signature", rec.signature}, {"values", std::move(values)}});
  }
  return out;
}

json invariants_json(const Store& store, std::string_view signature,
                     std::span<const std::string> ids) {
  json out = json::object();
  for (const auto& [id, v] : store.invariants_of(signature, ids)) out[id] = value_json(v);
  return out;
}

Response Service::invariants() const { return json_response(registry_json()); }

Response Service::polytope(std::string_view problem) const {
  return guarded([&] { return json_response(polytope_json(store_, decode_problem(problem))); });
}

Response Service::graphs(std::string_view request_body) const {
  return guarded([&] {
    json req = json::parse(request_body, nullptr, false);
    if (req.is_discarded() || !req.is_object()) throw ParseError("request body is not a JSON object");
    auto it = req.find("problem");
    if (it == req.end() || !it->is_string()) throw ParseError("'problem' must be an encoded string");
    ProblemSpec spec = decode_problem(it->get<std::string>());
    if (auto extra = req.find("extra_invariants"); extra != req.end()) {
      if (!extra->is_array()) throw ParseError("'extra_invariants' must be an array");
      for (const auto& id : *extra) {
        if (!id.is_string()) throw ParseError("extra invariant ids must be strings");
        auto name = id.get<std::string>();
        if (std::find(spec.extra_invariants.begin(), spec.extra_invariants.end(), name) ==
            spec.extra_invariants.end())
          spec.extra_invariants.push_back(name);
      }
    }
    std::vector<Point2> coords;
    auto cs = req.find("coordinates");
    if (cs == req.end() || !cs->is_array()) throw ParseError("'coordinates' must be an array");
    for (const auto& c : *cs) {
      if (!c.is_array() || c.size() != 2) throw ParseError("each coordinate must be [x, y]");
      coords.push_back({coordinate(c[0]), coordinate(c[1])});
    }
    return json_response(graphs_json(store_, spec, coords));
  });
}

Response Service::graph_invariants(std::string_view signature,
                                   std::optional<std::string_view> ids) const {
  return guarded([&] {
    std::vector<std::string> list = ids ? split_ids(*ids) : all_invariant_ids();
    return json_response(invariants_json(store_, signature, list));
  });
}

Response Service::export_g6(std::string_view problem) const {
  return guarded([&] {
    ProblemSpec spec = decode_problem(problem);
    validate(spec);
    const auto& sigs = store_.signatures(spec.order, spec.graph_class);
    std::string text;
    for (std::size_t i : store_.filter(spec.order, spec.graph_class, spec.constraints)) {
      text += sigs[i];
      text.push_back('\n');
    }
    return Response{200, "text/plain", std::move(text)};
  });
}

Response Service::docs() const { return {200, "text/plain", std::string(kDocs)}; }

struct HttpServer::Impl {
  Service service;
  httplib::Server server;
  std::thread thread;

  Impl(const Store& store, const std::string& cors_origin) : service(store) {
    auto send = [](httplib::Response& res, const Response& r) {
      res.status = r.status;
      res.set_content(r.body, r.content_type);
    };
    server.set_post_routing_handler([cors_origin](const httplib::Request&, httplib::Response& res) {
      res.set_header("Access-Control-Allow-Origin", cors_origin);
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    });
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Get("/api/invariants", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, service.invariants());
    });
    server.Get("/api/polytope", [this, send](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("problem"))
        return send(res, error_response(400, "bad_request", "missing 'problem' parameter"));
      send(res, service.polytope(req.get_param_value("problem")));
    });
    server.Post("/api/graphs", [this, send](const httplib::Request& req, httplib::Response& res) {
      send(res, service.graphs(req.body));
    });
    server.Get(R"(/api/graph/(.+)/invariants)",
               [this, send](const httplib::Request& req, httplib::Response& res) {
                 std::optional<std::string> ids;
                 if (req.has_param("ids")) ids = req.get_param_value("ids");
                 send(res, service.graph_invariants(req.matches[1].str(),
                                                    ids ? std::optional<std::string_view>(*ids)
                                                        : std::nullopt));
               });
    server.Get("/api/export.g6", [this, send](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("problem"))
        return send(res, error_response(400, "bad_request", "missing 'problem' parameter"));
      send(res, service.export_g6(req.get_param_value("problem")));
    });
    server.Get("/api/docs", [this, send](const httplib::Request&, httplib::Response& res) {
      send(res, service.docs());
    });
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        res.set_content(body(json{{"error", "not_found"}, {"detail", "no such endpoint"}}),
                        "application/json");
      }
    });
  }
};

HttpServer::HttpServer(const Store& store, std::string cors_origin)
    : impl_(std::make_unique<Impl>(store, cors_origin)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int default_port() {
  const char* env = std::getenv("PF_PORT");
  if (env && *env) return std::atoi(env);
  return kDefaultPort;
}

}  // namespace pf::api

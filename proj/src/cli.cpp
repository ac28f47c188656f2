#include "pf/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"

#include "pf/api.hpp"
#include "pf/conjectures.hpp"
#include "pf/curve.hpp"
#include "pf/errors.hpp"

namespace pf::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
  std::string data_dir;
  int ceiling = kDefaultOrderCeiling;
};

// Flags shared by every subcommand that describes a problem.
struct ProblemFlags {
  std::string x, y;
  int order = 0;
  std::string graph_class = "all";
  std::vector<std::string> constraints;
  std::string coloration;
  std::string highlight;
  std::vector<std::string> extras;

  void add_axes(CLI::App* app) {
    app->add_option("--x", x, "x-axis invariant id")->required();
    app->add_option("--y", y, "y-axis invariant id")->required();
  }
  void add_scope(CLI::App* app) {
    app->add_option("--order", order, "graph order")->required();
    app->add_option("--class", graph_class, "all, connected, tree or chemical");
    app->add_option("--constraint", constraints, "ID<=V, ID>=V, ID=V, ID<V, ID>V, ID=true, ID=false");
  }
  void add_decorations(CLI::App* app) {
    app->add_option("--coloration", coloration, "invariant used to color points");
    app->add_option("--highlight", highlight, "ID=V marks graphs whose value equals V");
  }

  ProblemSpec spec() const {
    ProblemSpec s;
    s.x = x;
    s.y = y;
    s.order = order;
    s.graph_class = parse_graph_class(graph_class);
    for (const auto& c : constraints) s.constraints.push_back(parse_constraint(c));
    if (!coloration.empty()) s.coloration = coloration;
    if (!highlight.empty()) s.highlight = parse_highlight(highlight);
    for (const auto& e : extras)
      if (std::find(s.extra_invariants.begin(), s.extra_invariants.end(), e) == s.extra_invariants.end())
        s.extra_invariants.push_back(e);
    validate(s);
    return s;
  }
};

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : list) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void check_order(int order, int ceiling) {
  if (order < 1 || order > ceiling)
    throw DomainError("order " + std::to_string(order) + " outside [1, " + std::to_string(ceiling) +
                      "]; raise --ceiling (at most " + std::to_string(kMaxOrderCeiling) + ") for more");
}

void check_format(const std::string& format) {
  if (format != "json" && format != "table") throw ParseError("--format must be json or table");
}

Point2 parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("--point expects X,Y");
  return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
}

std::string value_text(const InvariantValue& v) {
  return is_undefined(v) ? "undefined" : to_string(v);
}

void print_polytope_table(std::ostream& out, const json& j, bool colored) {
  const auto& meta = j["meta"];
  out << "points " << meta["point_count"] << "  hull vertices " << meta["vertex_count"]
      << "  graphs " << meta["graph_count"] << "  dropped (undefined) " << meta["dropped_undefined"]
      << "\n\n";
  out << std::left << std::setw(12) << "x" << std::setw(12) << "y" << std::setw(14) << "multiplicity";
  if (colored) out << std::setw(12) << "color";
  out << "highlight\n";
  for (const auto& p : j["points"]) {
    out << std::setw(12) << p["x"].get<std::string>() << std::setw(12) << p["y"].get<std::string>()
        << std::setw(14) << p["multiplicity"].get<std::uint64_t>();
    if (colored) {
      const auto& c = p["color"];
      out << std::setw(12) << (c.is_null() ? std::string("undefined") : c.is_string() ? c.get<std::string>() : c.dump());
    }
    out << p["highlight"].get<std::string>() << "\n";
  }
  const auto& hull = j["hull"];
  if (hull["shape"].is_null()) return;
  out << "\nhull (" << hull["shape"].get<std::string>() << "):";
  for (const auto& v : hull["vertices"])
    out << " (" << v["x"].get<std::string>() << ", " << v["y"].get<std::string>() << ")";
  out << "\nfacets:\n";
  for (const auto& f : hull["facets"]) {
    auto num = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    std::string a = num(f["a"]), b = num(f["b"]);
    std::string lhs;
    auto term = [&lhs](std::string coef, const char* var) {
      if (coef == "0") return;
      bool neg = coef.front() == '-';
      if (neg) coef.erase(0, 1);
      if (lhs.empty()) lhs = neg ? "-" : "";
      else lhs += neg ? " - " : " + ";
      lhs += (coef == "1" ? "" : coef) + var;
    };
    term(a, "x");
    term(b, "y");
    out << "  " << lhs << " <= " << num(f["c"]) << "   [" << f["incident"].size() << " points]\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive small-graph enumeration and invariant polytopes", "polyfacet"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--data-dir", g.data_dir, "store root (default: $PF_DATA_DIR or ./data)");
  app.add_option("--ceiling", g.ceiling, "largest order the tool will enumerate")
      ->check(CLI::Range(1, kMaxOrderCeiling));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "print canonical graph6 signatures of one order");
  int enum_order = 0;
  std::string enum_class = "all", enum_out;
  enumerate->add_option("--order", enum_order)->required();
  enumerate->add_option("--class", enum_class);
  enumerate->add_option("--out", enum_out, "directory (or .g6 file) to write instead of stdout");

  // build
  auto* build = app.add_subcommand("build", "enumerate a corpus and store invariant columns");
  int build_order = 0;
  std::string build_class = "all", build_ids = "all";
  build->add_option("--order", build_order)->required();
  build->add_option("--class", build_class);
  build->add_option("--invariants", build_ids, "comma-separated ids or 'all'");

  // polytope
  auto* polytope = app.add_subcommand("polytope", "point cloud, hull and facets of an invariant pair");
  ProblemFlags poly;
  std::string poly_format = "table";
  poly.add_axes(polytope);
  poly.add_scope(polytope);
  poly.add_decorations(polytope);
  polytope->add_option("--format", poly_format, "json or table");

  // graphs-at
  auto* graphs_at = app.add_subcommand("graphs-at", "graphs lying on given points of the cloud");
  ProblemFlags at;
  std::vector<std::string> at_points;
  std::string at_extras, at_format = "json";
  at.add_axes(graphs_at);
  at.add_scope(graphs_at);
  at.add_decorations(graphs_at);
  graphs_at->add_option("--point", at_points, "X,Y")->required();
  graphs_at->add_option("--extra-invariants", at_extras, "comma-separated ids to attach");
  graphs_at->add_option("--format", at_format, "json or table");

  // check-curve
  auto* check_curve = app.add_subcommand("check-curve", "compare an envelope of the cloud with f(x, n)");
  ProblemFlags curve_flags;
  std::string curve_expr, curve_side, curve_format = "table";
  check_curve->add_option("--expr", curve_expr, "expression in x and n")->required();
  curve_flags.add_axes(check_curve);
  curve_flags.add_scope(check_curve);
  check_curve->add_option("--side", curve_side, "upper or lower")->required();
  check_curve->add_option("--format", curve_format, "json or table");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "exact optimum of an invariant with all witnesses");
  std::string ext_objective, ext_direction, ext_class = "all", ext_format = "table";
  int ext_order = 0;
  std::vector<std::string> ext_constraints;
  extremal->add_option("--objective", ext_objective)->required();
  extremal->add_option("--direction", ext_direction, "max or min")->required();
  extremal->add_option("--order", ext_order)->required();
  extremal->add_option("--class", ext_class);
  extremal->add_option("--constraint", ext_constraints);
  extremal->add_option("--format", ext_format, "json or table");

  // invariants
  auto* invariants = app.add_subcommand("invariants", "invariant values of one graph");
  std::string inv_signature, inv_ids, inv_format = "table";
  invariants->add_option("--signature", inv_signature, "graph6 string")->required();
  invariants->add_option("--ids", inv_ids, "comma-separated ids (default: all)");
  invariants->add_option("--format", inv_format, "json or table");

  // serve
  auto* serve = app.add_subcommand("serve", "run the read-only HTTP API");
  int serve_port = api::default_port();
  std::string serve_host = "127.0.0.1", serve_cors = "*";
  serve->add_option("--port", serve_port, "default: $PF_PORT or 8711");
  serve->add_option("--host", serve_host);
  serve->add_option("--cors-origin", serve_cors);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Store store(g.data_dir.empty() ? Store::default_root() : fs::path(g.data_dir), g.ceiling);

    if (*enumerate) {
      GraphClass cls = parse_graph_class(enum_class);
      check_order(enum_order, g.ceiling);
      std::vector<std::string> lines;
      for (const auto& graph : enumerate_order(enum_order, cls, g.ceiling)) lines.push_back(to_graph6(graph));
      if (enum_out.empty()) {
        for (const auto& l : lines) out << l << "\n";
      } else {
        fs::path target = enum_out;
        if (target.extension() != ".g6") {
          fs::create_directories(target);
          target /= corpus_file_name(enum_order, cls);
        }
        write_g6_file(target, lines);
        err << lines.size() << " graphs written to " << target.string() << "\n";
      }
    } else if (*build) {
      GraphClass cls = parse_graph_class(build_class);
      check_order(build_order, g.ceiling);
      std::vector<std::string> ids = build_ids == "all" ? all_invariant_ids() : split_list(build_ids);
      for (const auto& id : ids) invariant(id);
      CorpusHandle h = store.build(build_order, cls, ids);
      out << "order " << h.order << ", class " << to_string(h.graph_class) << ": " << h.rows
          << " graphs, " << h.columns.size() << " columns in " << h.dir.string() << "\n";
    } else if (*polytope) {
      check_format(poly_format);
      ProblemSpec spec = poly.spec();
      json j = api::polytope_json(store, spec);
      if (poly_format == "json") out << api::body(j);
      else print_polytope_table(out, j, spec.coloration.has_value());
    } else if (*graphs_at) {
      check_format(at_format);
      at.extras = split_list(at_extras);
      ProblemSpec spec = at.spec();
      std::vector<Point2> coords;
      for (const auto& p : at_points) coords.push_back(parse_point(p));
      json j = api::graphs_json(store, spec, coords);
      if (at_format == "json") {
        out << api::body(j);
      } else {
        for (const auto& rec : j) {
          out << rec["signature"].get<std::string>();
          for (const auto& [id, v] : rec["values"].items())
            out << "  " << id << "=" << (v.is_null() ? std::string("undefined") : v.is_string() ? v.get<std::string>() : v.dump());
          out << "\n";
        }
      }
    } else if (*check_curve) {
      check_format(curve_format);
      curve::Side side = curve::parse_side(curve_side);
      curve::ExprPtr expr = curve::parse(curve_expr);
      ProblemSpec spec = curve_flags.spec();
      QueryResult q = store.query(spec);
      std::vector<PointRow> rows;
      for (auto& r : q.rows) rows.push_back({r.x, r.y, std::nullopt, std::nullopt});
      auto points = collect_points(rows);
      auto report = curve::check_envelope(points, *expr, spec.order, side);
      if (curve_format == "json") {
        json entries = json::array();
        for (const auto& e : report.entries) {
          json o = {{"x", e.x.str()}, {"y", e.y.str()}, {"aligned", e.aligned}};
          o["curve"] = e.curve ? json(*e.curve) : json(nullptr);
          o["residual"] = e.residual ? json(*e.residual) : json(nullptr);
          if (!e.error.empty()) o["error"] = e.error;
          entries.push_back(std::move(o));
        }
        out << api::body({{"expr", curve::print(*expr)},
                          {"side", std::string(curve::to_string(side))},
                          {"order", spec.order},
                          {"all_aligned", report.all_aligned()},
                          {"entries", std::move(entries)}});
      } else {
        out << curve::to_string(side) << " envelope vs " << curve::print(*expr) << "\n";
        out << std::left << std::setw(10) << "x" << std::setw(10) << "y" << std::setw(16) << "f(x,n)"
            << std::setw(16) << "residual" << "aligned\n";
        for (const auto& e : report.entries) {
          out << std::setw(10) << e.x.str() << std::setw(10) << e.y.str();
          if (e.error.empty())
            out << std::setw(16) << *e.curve << std::setw(16) << *e.residual << (e.aligned ? "yes" : "no");
          else
            out << "error: " << e.error;
          out << "\n";
        }
        out << (report.all_aligned() ? "all aligned" : "not aligned") << "\n";
      }
    } else if (*extremal) {
      check_format(ext_format);
      Direction dir = parse_direction(ext_direction);
      GraphClass cls = parse_graph_class(ext_class);
      std::vector<Constraint> cs;
      for (const auto& c : ext_constraints) cs.push_back(parse_constraint(c));
      validate(cs);
      ExtremalReport r = extremal_search(store, ext_order, cls, cs, ext_objective, dir);
      if (ext_format == "json") {
        out << api::body({{"objective", r.objective},
                          {"direction", std::string(to_string(r.direction))},
                          {"optimum", api::rational_json(r.optimum)},
                          {"witnesses", r.witnesses}});
      } else {
        out << to_string(r.direction) << " " << r.objective << " = " << r.optimum.str() << "  ("
            << r.witnesses.size() << " witness" << (r.witnesses.size() == 1 ? "" : "es") << ")\n";
        for (const auto& w : r.witnesses) out << w << "\n";
      }
    } else if (*invariants) {
      check_format(inv_format);
      std::vector<std::string> ids = inv_ids.empty() ? all_invariant_ids() : split_list(inv_ids);
      if (inv_format == "json") {
        out << api::body(api::invariants_json(store, inv_signature, ids));
      } else {
        auto values = store.invariants_of(inv_signature, ids);
        for (const auto& id : ids) out << std::left << std::setw(32) << id << value_text(values.at(id)) << "\n";
      }
    } else if (*serve) {
      if (serve_port < 0 || serve_port > 65535) throw ParseError("--port outside [0, 65535]");
      api::HttpServer server(store, serve_cors);
      err << "serving " << store.root().string() << " on http://" << serve_host << ":" << serve_port << "\n";
      if (!server.listen(serve_host, serve_port)) throw Error("cannot listen on " + serve_host + ":" + std::to_string(serve_port));
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace pf::cli

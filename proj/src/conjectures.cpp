#include "pf/conjectures.hpp"

#include <boost/multiprecision/integer.hpp>

#include "pf/errors.hpp"
#include "pf/invariants.hpp"

namespace pf {

namespace {

std::int64_t floor_div2(std::int64_t a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

std::int64_t binom2(std::int64_t k) { return k * (k - 1) / 2; }

}  // namespace

std::int64_t compute_d(std::int64_t n, std::int64_t m) {
  std::int64_t radicand = 17 + 8 * (m - n);
  if (radicand < 0)
    throw DomainError("d(n, m): negative radicand 17 + 8(m - n) = " + std::to_string(radicand));
  auto s = static_cast<std::int64_t>(boost::multiprecision::sqrt(BigInt(radicand)));
  std::int64_t a = 2 * n + 1 - s;
  // For a non-square radicand sqrt lies strictly inside (s, s + 1), so the
  // halved value lies strictly inside ((a - 1) / 2, a / 2).
  return s * s == radicand ? floor_div2(a) : floor_div2(a - 1);
}

Graph build_E(int n, int m) {
  if (n < 1 || n > Graph::kMaxOrder) throw DomainError("build_E: order outside [1, 62]");
  std::int64_t d = compute_d(n, m);
  if (d < 3) throw DomainError("build_E: d = " + std::to_string(d) + " < 3");
  std::int64_t clique = n - d - 1;
  if (clique < 0) throw DomainError("build_E: clique size n - d - 1 = " + std::to_string(clique) + " < 0");
  std::int64_t extra = m - n + 1 - binom2(n - d);
  if (extra < 0 || extra > clique)
    throw DomainError("build_E: extra joins m - n + 1 - C(n-d, 2) = " + std::to_string(extra) +
                      " outside [0, " + std::to_string(clique) + "]");
  Graph g(n);
  const int D = static_cast<int>(d);
  for (int i = 1; i <= D; ++i) g.add_edge(i - 1, i);
  for (int a = D + 1; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    g.add_edge(a, D);
    g.add_edge(a, D - 1);
  }
  for (int i = 0; i < extra; ++i) g.add_edge(D + 1 + i, D - 2);
  return g;
}

Graph balanced_clique_union(int n, int k) {
  if (k < 1 || k > n) throw DomainError("balanced_clique_union: need 1 <= k <= n");
  Graph g(n);
  int start = 0;
  for (int part = 0; part < k; ++part) {
    int sz = n / k + (part < n % k ? 1 : 0);
    for (int a = start; a < start + sz; ++a)
      for (int b = a + 1; b < start + sz; ++b) g.add_edge(a, b);
    start += sz;
  }
  return g;
}

Graph complete_split_graph(int n, int k) {
  if (k < 1 || k > n) throw DomainError("complete_split_graph: need 1 <= k <= n");
  Graph g(n);
  for (int a = k; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (b != a && (b < k || b > a)) g.add_edge(a, b);
  return g;
}

Direction parse_direction(std::string_view s) {
  if (s == "max") return Direction::max;
  if (s == "min") return Direction::min;
  throw ParseError("direction must be 'max' or 'min'");
}

std::string_view to_string(Direction d) { return d == Direction::max ? "max" : "min"; }

ExtremalReport extremal_search(const Store& store, int order, GraphClass cls,
                               std::span<const Constraint> constraints,
                               std::string_view objective, Direction direction) {
  const auto& desc = invariant(objective);
  if (desc.kind != InvariantKind::numeric)
    throw DomainError("objective '" + desc.id + "' is not numeric");
  validate(constraints);
  const auto& values = store.column(order, cls, objective);
  const auto& sigs = store.signatures(order, cls);

  ExtremalReport report{desc.id, direction, Rational::undefined(), {}};
  for (std::size_t i : store.filter(order, cls, constraints)) {
    const auto& v = values[i];
    if (is_undefined(v)) continue;
    const Rational& r = std::get<Rational>(v);
    bool better = !report.optimum.defined() ||
                  (direction == Direction::max ? r > report.optimum : r < report.optimum);
    if (better) {
      report.optimum = r;
      report.witnesses.clear();
    }
    if (r == report.optimum) report.witnesses.push_back(sigs[i]);
  }
  if (!report.optimum.defined())
    throw DomainError("extremal search over an empty filtered corpus");
  return report;
}

ExtremalReport extremal_search(const Store& store, const ProblemSpec& spec,
                               std::string_view objective, Direction direction) {
  return extremal_search(store, spec.order, spec.graph_class, spec.constraints, objective,
                         direction);
}

}  // namespace pf

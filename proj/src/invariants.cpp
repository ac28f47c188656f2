#include "pf/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>

#include "pf/errors.hpp"

namespace pf {

namespace {

constexpr int kMaxN = Graph::kMaxOrder;

inline VertexSet bit_of(int v) { return VertexSet{1} << v; }
inline int low(VertexSet s) { return std::countr_zero(s); }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("counting invariant exceeds 64 bits");
  return r;
}

VertexSet reach(const Adjacency& adj, int start) {
  VertexSet seen = bit_of(start), frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= adj.row[low(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

int component_count(const Adjacency& adj) {
  int c = 0;
  for (VertexSet unseen = adj.all(); unseen; ++c) unseen &= ~reach(adj, low(unseen));
  return c;
}

bool connected(const Adjacency& adj) { return adj.n > 0 && reach(adj, 0) == adj.all(); }

// Empty when disconnected.
std::vector<int> eccentricities(const Adjacency& adj) {
  if (!connected(adj)) return {};
  std::vector<int> ecc(adj.n);
  for (int v = 0; v < adj.n; ++v) {
    VertexSet seen = bit_of(v), frontier = seen;
    int dist = 0;
    while (seen != adj.all()) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= adj.row[low(f)];
      frontier = next & ~seen;
      seen |= next;
      ++dist;
    }
    ecc[v] = dist;
  }
  return ecc;
}

// Branch and bound over candidate bitsets.
void clique_search(const Adjacency& adj, VertexSet candidates, int size, int& best) {
  if (!candidates) {
    best = std::max(best, size);
    return;
  }
  while (candidates) {
    if (size + std::popcount(candidates) <= best) return;
    int v = low(candidates);
    candidates &= candidates - 1;
    clique_search(adj, candidates & adj.row[v], size + 1, best);
  }
}

int clique_number(const Adjacency& adj) {
  int best = 0;
  clique_search(adj, adj.all(), 0, best);
  return best;
}

Adjacency complement_rows(const Adjacency& adj) {
  Adjacency c = adj;
  for (int v = 0; v < adj.n; ++v) c.row[v] = adj.all() & ~adj.row[v] & ~bit_of(v);
  return c;
}

int greedy_colors(const Adjacency& adj) {
  // DSATUR: repeatedly color the vertex with most distinct neighbor colors.
  std::array<int, kMaxN> color;
  color.fill(-1);
  std::array<std::uint64_t, kMaxN> seen_colors{};
  int used = 0;
  for (int step = 0; step < adj.n; ++step) {
    int pick = -1, pick_sat = -1, pick_deg = -1;
    for (int v = 0; v < adj.n; ++v) {
      if (color[v] >= 0) continue;
      int sat = std::popcount(seen_colors[v]);
      int deg = adj.degree(v);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    int c = std::countr_one(seen_colors[pick]);
    color[pick] = c;
    used = std::max(used, c + 1);
    for (VertexSet r = adj.row[pick]; r; r &= r - 1) seen_colors[low(r)] |= std::uint64_t{1} << c;
  }
  return used;
}

bool colorable(const Adjacency& adj, const std::vector<int>& order, std::size_t idx,
               std::array<int, kMaxN>& color, int k, int used) {
  if (idx == order.size()) return true;
  int v = order[idx];
  std::uint64_t forbidden = 0;
  for (VertexSet r = adj.row[v]; r; r &= r - 1)
    if (color[low(r)] >= 0) forbidden |= std::uint64_t{1} << color[low(r)];
  // colors above `used` are interchangeable, try only the first of them
  int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((forbidden >> c) & 1u) continue;
    color[v] = c;
    if (colorable(adj, order, idx + 1, color, k, std::max(used, c + 1))) return true;
  }
  color[v] = -1;
  return false;
}

int chromatic_number(const Adjacency& adj) {
  if (adj.n == 0) return 0;
  int lower = clique_number(adj);
  int upper = greedy_colors(adj);
  if (lower == upper) return lower;
  std::vector<int> order(adj.n);
  for (int v = 0; v < adj.n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return adj.degree(a) > adj.degree(b); });
  for (int k = lower; k < upper; ++k) {
    std::array<int, kMaxN> color;
    color.fill(-1);
    if (colorable(adj, order, 0, color, k, 0)) return k;
  }
  return upper;
}

int matching_number(const Adjacency& adj, VertexSet alive) {
  while (alive) {
    int v = low(alive);
    VertexSet nb = adj.row[v] & alive;
    alive &= ~bit_of(v);
    if (!nb) continue;
    int best = matching_number(adj, alive);
    for (VertexSet r = nb; r; r &= r - 1)
      best = std::max(best, 1 + matching_number(adj, alive & ~bit_of(low(r))));
    return best;
  }
  return 0;
}

// F(G) = F(G - v) + F(G - N[v]) on a maximum-degree vertex; F(empty_k) = 2^k.
// The result is at most 2^62, so 64-bit accumulation is exact.
std::uint64_t stable_sets(const Adjacency& adj, VertexSet alive) {
  int pick = -1, pick_deg = 0;
  for (VertexSet r = alive; r; r &= r - 1) {
    int v = low(r);
    int d = std::popcount(adj.row[v] & alive);
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  if (pick < 0) return std::uint64_t{1} << std::popcount(alive);
  return stable_sets(adj, alive & ~bit_of(pick)) +
         stable_sets(adj, alive & ~(adj.row[pick] | bit_of(pick)));
}

// Edge recursion M(G) = M(G - e) + M(G - {u, v}) applied to every edge at the
// lowest live vertex at once: M(G) = M(G - v) + sum_{u ~ v} M(G - {u, v}).
std::uint64_t matchings(const Adjacency& adj, VertexSet alive) {
  while (alive) {
    int v = low(alive);
    VertexSet nb = adj.row[v] & alive;
    alive &= ~bit_of(v);
    if (!nb) continue;
    std::uint64_t total = matchings(adj, alive);
    for (VertexSet r = nb; r; r &= r - 1)
      total = checked_add(total, matchings(adj, alive & ~bit_of(low(r))));
    return total;
  }
  return 1;
}

// Partitions into stable sets by deletion-contraction on a non-adjacent pair:
// P(G) = P(G + uv) + P(G / uv); the leaves are complete graphs K_r, each
// contributing one partition with r blocks. Every leaf is one partition, so
// the counts cannot outgrow 64 bits in any run that terminates.
void partition_profile(const VertexSet* rows, VertexSet alive, std::array<std::uint64_t, kMaxN + 1>& profile) {
  for (VertexSet r = alive; r; r &= r - 1) {
    int u = low(r);
    VertexSet non = alive & ~rows[u] & ~bit_of(u);
    if (!non) continue;
    int v = low(non);
    int top = 64 - std::countl_zero(alive);
    std::array<VertexSet, kMaxN> child;

    // G + uv
    std::copy(rows, rows + top, child.begin());
    child[u] |= bit_of(v);
    child[v] |= bit_of(u);
    partition_profile(child.data(), alive, profile);

    // G / uv: v merged into u
    std::copy(rows, rows + top, child.begin());
    VertexSet nv = rows[v] & alive;
    child[u] |= nv;
    for (VertexSet w = nv; w; w &= w - 1) child[low(w)] |= bit_of(u);
    partition_profile(child.data(), alive & ~bit_of(v), profile);
    return;
  }
  int k = std::popcount(alive);
  profile[k] = checked_add(profile[k], 1);
}

std::array<std::uint64_t, kMaxN + 1> partition_profile(const Adjacency& adj) {
  std::array<std::uint64_t, kMaxN + 1> profile{};
  std::array<VertexSet, kMaxN> rows = adj.row;
  for (int v = 0; v < adj.n; ++v) rows[v] &= adj.all();
  partition_profile(rows.data(), adj.all(), profile);
  return profile;
}

bool bipartite(const Adjacency& adj) {
  VertexSet unseen = adj.all();
  while (unseen) {
    VertexSet side[2] = {bit_of(low(unseen)), 0};
    VertexSet frontier = side[0];
    int parity = 0;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= adj.row[low(f)];
      if (next & side[parity]) return false;
      parity ^= 1;
      frontier = next & ~side[parity];
      side[parity] |= next;
    }
    unseen &= ~(side[0] | side[1]);
  }
  return true;
}

int min_degree(const Adjacency& adj) {
  if (adj.n == 0) return 0;
  int m = kMaxN;
  for (int v = 0; v < adj.n; ++v) m = std::min(m, adj.degree(v));
  return m;
}

int max_degree(const Adjacency& adj) {
  int m = 0;
  for (int v = 0; v < adj.n; ++v) m = std::max(m, adj.degree(v));
  return m;
}

int edge_count(const Adjacency& adj) {
  int twice = 0;
  for (int v = 0; v < adj.n; ++v) twice += adj.degree(v);
  return twice / 2;
}

Rational to_rational(std::uint64_t v) { return Rational(BigInt(v)); }

Rational eci(const Adjacency& adj) {
  auto ecc = eccentricities(adj);
  if (ecc.empty()) return Rational::undefined();
  std::int64_t sum = 0;
  for (int v = 0; v < adj.n; ++v) sum += static_cast<std::int64_t>(adj.degree(v)) * ecc[v];
  return Rational(sum);
}

Rational nonequiv(const Adjacency& adj) {
  auto profile = partition_profile(adj);
  BigInt total = 0;
  for (auto c : profile) total += c;
  return Rational(total);
}

Rational avg_colors(const Adjacency& adj) {
  auto profile = partition_profile(adj);
  BigInt total = 0, weighted = 0;
  for (int k = 0; k <= kMaxN; ++k) {
    total += profile[k];
    weighted += BigInt(profile[k]) * k;
  }
  return Rational(weighted, total);
}

using Kernel = std::function<InvariantValue(const Adjacency&)>;

struct Entry {
  InvariantDescriptor descriptor;
  Kernel kernel;
};

InvariantValue num(std::int64_t v) { return Rational(v); }

const std::vector<Entry>& entries() {
  using K = InvariantKind;
  using D = InvariantDomain;
  static const std::vector<Entry> table = {
      {{"order", "Order", K::numeric, D::all}, [](const Adjacency& a) { return num(a.n); }},
      {{"size", "Size", K::numeric, D::all}, [](const Adjacency& a) { return num(edge_count(a)); }},
      {{"min_degree", "Minimum degree", K::numeric, D::all},
       [](const Adjacency& a) { return num(min_degree(a)); }},
      {{"max_degree", "Maximum degree", K::numeric, D::all},
       [](const Adjacency& a) { return num(max_degree(a)); }},
      {{"num_components", "Number of components", K::numeric, D::all},
       [](const Adjacency& a) { return num(component_count(a)); }},
      {{"diameter", "Diameter", K::numeric, D::connected_only},
       [](const Adjacency& a) -> InvariantValue {
         auto e = eccentricities(a);
         if (e.empty()) return Rational::undefined();
         return num(*std::max_element(e.begin(), e.end()));
       }},
      {{"radius", "Radius", K::numeric, D::connected_only},
       [](const Adjacency& a) -> InvariantValue {
         auto e = eccentricities(a);
         if (e.empty()) return Rational::undefined();
         return num(*std::min_element(e.begin(), e.end()));
       }},
      {{"eccentric_connectivity_index", "Eccentric connectivity index", K::numeric,
        D::connected_only},
       [](const Adjacency& a) { return InvariantValue(eci(a)); }},
      {{"chromatic_number", "Chromatic number", K::numeric, D::all},
       [](const Adjacency& a) { return num(chromatic_number(a)); }},
      {{"clique_number", "Clique number", K::numeric, D::all},
       [](const Adjacency& a) { return num(clique_number(a)); }},
      {{"independence_number", "Independence number", K::numeric, D::all},
       [](const Adjacency& a) { return num(clique_number(complement_rows(a))); }},
      {{"matching_number", "Matching number", K::numeric, D::all},
       [](const Adjacency& a) { return num(matching_number(a, a.all())); }},
      {{"stable_set_count", "Number of stable sets (Fibonacci index)", K::numeric, D::all},
       [](const Adjacency& a) { return InvariantValue(to_rational(stable_sets(a, a.all()))); }},
      {{"matching_count", "Number of matchings", K::numeric, D::all},
       [](const Adjacency& a) { return InvariantValue(to_rational(matchings(a, a.all()))); }},
      {{"nonequiv_colorings", "Number of non-equivalent colorings", K::numeric, D::all},
       [](const Adjacency& a) { return InvariantValue(nonequiv(a)); }},
      {{"avg_colors", "Average number of colors over non-equivalent colorings", K::numeric,
        D::all},
       [](const Adjacency& a) { return InvariantValue(avg_colors(a)); }},
      {{"connected", "Connected", K::boolean, D::all},
       [](const Adjacency& a) { return InvariantValue(connected(a)); }},
      {{"bipartite", "Bipartite", K::boolean, D::all},
       [](const Adjacency& a) { return InvariantValue(bipartite(a)); }},
      {{"tree", "Tree", K::boolean, D::all},
       [](const Adjacency& a) {
         return InvariantValue(connected(a) && edge_count(a) == a.n - 1);
       }},
      {{"forest", "Forest", K::boolean, D::all},
       [](const Adjacency& a) {
         return InvariantValue(edge_count(a) == a.n - component_count(a));
       }},
      {{"regular", "Regular", K::boolean, D::all},
       [](const Adjacency& a) { return InvariantValue(min_degree(a) == max_degree(a)); }},
      {{"chemical", "Chemical (connected, max degree at most 4)", K::boolean, D::all},
       [](const Adjacency& a) { return InvariantValue(connected(a) && max_degree(a) <= 4); }},
      {{"has_isolated_vertex", "Has an isolated vertex", K::boolean, D::all},
       [](const Adjacency& a) { return InvariantValue(a.n > 0 && min_degree(a) == 0); }},
  };
  return table;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.descriptor.id == id) return e;
  throw DomainError("unknown invariant '" + std::string(id) + "'");
}

}  // namespace

std::string to_string(const InvariantValue& v) {
  if (is_undefined(v)) return "undefined";
  if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<Rational>(v).str();
}

std::string_view to_string(InvariantKind k) {
  return k == InvariantKind::numeric ? "numeric" : "boolean";
}

std::string_view to_string(InvariantDomain d) {
  return d == InvariantDomain::all ? "all" : "connected-only";
}

const std::vector<InvariantDescriptor>& registry() {
  static const std::vector<InvariantDescriptor> list = [] {
    std::vector<InvariantDescriptor> out;
    for (const auto& e : entries()) out.push_back(e.descriptor);
    return out;
  }();
  return list;
}

const InvariantDescriptor* find_invariant(std::string_view id) {
  for (const auto& d : registry())
    if (d.id == id) return &d;
  return nullptr;
}

const InvariantDescriptor& invariant(std::string_view id) { return entry(id).descriptor; }

std::vector<std::string> all_invariant_ids() {
  std::vector<std::string> ids;
  for (const auto& d : registry()) ids.push_back(d.id);
  return ids;
}

InvariantValue eval(std::string_view id, const Graph& g) { return entry(id).kernel(Adjacency(g)); }

std::vector<InvariantValue> evaluate_column(std::string_view id, std::span<const Graph> graphs,
                                            Exec exec) {
  const Kernel& kernel = entry(id).kernel;
  std::vector<InvariantValue> out(graphs.size());
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = kernel(Adjacency(graphs[i]));
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = kernel(Adjacency(graphs[i]));
  }
  return out;
}

Rational eccentric_connectivity_index(const Graph& g) { return eci(Adjacency(g)); }

Rational diameter(const Graph& g) { return std::get<Rational>(eval("diameter", g)); }
Rational radius(const Graph& g) { return std::get<Rational>(eval("radius", g)); }
std::vector<int> eccentricities(const Graph& g) { return eccentricities(Adjacency(g)); }

Rational stable_set_count(const Graph& g) {
  Adjacency a(g);
  return to_rational(stable_sets(a, a.all()));
}

Rational matching_count(const Graph& g) {
  Adjacency a(g);
  return to_rational(matchings(a, a.all()));
}

Rational matching_number(const Graph& g) {
  Adjacency a(g);
  return Rational(matching_number(a, a.all()));
}

Rational chromatic_number(const Graph& g) { return Rational(chromatic_number(Adjacency(g))); }

std::pair<Rational, Rational> clique_and_independence(const Graph& g) {
  Adjacency a(g);
  return {Rational(clique_number(a)), Rational(clique_number(complement_rows(a)))};
}

std::map<int, BigInt> color_partition_profile(const Graph& g) {
  auto profile = partition_profile(Adjacency(g));
  std::map<int, BigInt> out;
  for (int k = 0; k <= kMaxN; ++k)
    if (profile[k]) out[k] = profile[k];
  return out;
}

Rational nonequiv_colorings(const Graph& g) { return nonequiv(Adjacency(g)); }
Rational avg_colors(const Graph& g) { return avg_colors(Adjacency(g)); }

bool is_connected(const Graph& g) { return connected(Adjacency(g)); }
bool is_bipartite(const Graph& g) { return bipartite(Adjacency(g)); }

}  // namespace pf

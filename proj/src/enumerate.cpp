#include "pf/enumerate.hpp"

#include <algorithm>
#include <iterator>

#include "pf/canon.hpp"
#include "pf/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pf {

namespace {

constexpr std::size_t kParentChunk = 1 << 14;

bool is_connected(const Adjacency& adj) {
  if (adj.n == 0) return false;
  VertexSet seen = 1, frontier = 1;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= adj.row[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == adj.all();
}

void expand_parent(const Graph& parent, std::vector<Graph>& out) {
  const Adjacency adj(parent);
  const int n = parent.order();
  std::array<int, Graph::kMaxOrder> deg{};
  for (int v = 0; v < n; ++v) deg[v] = adj.degree(v);
  const VertexSet limit = VertexSet{1} << n;
  for (VertexSet s = 0; s < limit; ++s) {
    const int k = std::popcount(s);
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = k <= deg[v] + static_cast<int>((s >> v) & 1u);
    if (!ok) continue;
    out.push_back(canonical_form(add_vertex(parent, s)).canonical_graph);
  }
}

void sort_unique(std::vector<Graph>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Graph> expand_chunk(std::span<const Graph> parents, Exec exec) {
  std::vector<Graph> out;
#ifdef _OPENMP
  if (exec == Exec::parallel && omp_get_max_threads() > 1) {
    const auto count = static_cast<std::ptrdiff_t>(parents.size());
#pragma omp parallel
    {
      std::vector<Graph> local;
#pragma omp for schedule(dynamic, 16) nowait
      for (std::ptrdiff_t i = 0; i < count; ++i) expand_parent(parents[i], local);
      sort_unique(local);
#pragma omp critical(pf_augment_merge)
      out.insert(out.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
    }
    sort_unique(out);
    return out;
  }
#endif
  (void)exec;
  for (const auto& p : parents) expand_parent(p, out);
  sort_unique(out);
  return out;
}

}  // namespace

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::all: return "all";
    case GraphClass::connected: return "connected";
    case GraphClass::tree: return "tree";
    case GraphClass::chemical: return "chemical";
  }
  return "all";
}

GraphClass parse_graph_class(std::string_view name) {
  if (name == "all") return GraphClass::all;
  if (name == "connected") return GraphClass::connected;
  if (name == "tree") return GraphClass::tree;
  if (name == "chemical") return GraphClass::chemical;
  throw DomainError("unknown graph class '" + std::string(name) + "'");
}

bool in_class(const Graph& g, GraphClass c) {
  if (c == GraphClass::all) return true;
  const Adjacency adj(g);
  if (!is_connected(adj)) return false;
  switch (c) {
    case GraphClass::tree: return g.size() == g.order() - 1;
    case GraphClass::chemical:
      for (int v = 0; v < adj.n; ++v)
        if (adj.degree(v) > 4) return false;
      return true;
    default: return true;
  }
}

std::vector<Graph> augment(std::span<const Graph> parents, Exec exec) {
  std::vector<Graph> result;
  for (std::size_t start = 0; start < parents.size(); start += kParentChunk) {
    auto chunk = parents.subspan(start, std::min(kParentChunk, parents.size() - start));
    std::vector<Graph> fresh = expand_chunk(chunk, exec);
    if (result.empty()) {
      result = std::move(fresh);
      continue;
    }
    std::vector<Graph> merged;
    merged.reserve(result.size() + fresh.size());
    std::set_union(std::make_move_iterator(result.begin()), std::make_move_iterator(result.end()),
                   std::make_move_iterator(fresh.begin()), std::make_move_iterator(fresh.end()),
                   std::back_inserter(merged));
    result = std::move(merged);
  }
  return result;
}

std::vector<std::vector<Graph>> enumerate_up_to(int n, int ceiling, Exec exec) {
  if (ceiling > kMaxOrderCeiling)
    throw DomainError("order ceiling " + std::to_string(ceiling) + " above supported maximum " +
                      std::to_string(kMaxOrderCeiling));
  if (n < 1 || n > ceiling)
    throw DomainError("order " + std::to_string(n) + " outside [1, " + std::to_string(ceiling) +
                      "]");
  std::vector<std::vector<Graph>> levels;
  levels.push_back({Graph(1)});
  for (int k = 2; k <= n; ++k) levels.push_back(augment(levels.back(), exec));
  return levels;
}

std::vector<Graph> enumerate_order(int n, GraphClass cls, int ceiling, Exec exec) {
  auto levels = enumerate_up_to(n, ceiling, exec);
  return filter_class(levels.back(), cls);
}

std::vector<Graph> filter_class(std::span<const Graph> graphs, GraphClass cls) {
  std::vector<Graph> out;
  for (const auto& g : graphs)
    if (in_class(g, cls)) out.push_back(g);
  return out;
}

std::string corpus_file_name(int n, GraphClass cls) {
  std::string name = "order_" + std::to_string(n);
  if (cls != GraphClass::all) name += "_" + std::string(to_string(cls));
  return name + ".g6";
}

}  // namespace pf

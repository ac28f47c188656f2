#include "pf/graph.hpp"

#include <algorithm>
#include <numeric>

#include "pf/errors.hpp"

namespace pf {

namespace {

std::size_t word_count(int n) { return (Graph::pair_count(n) + 63) / 64; }

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                      std::to_string(g.order()));
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw DomainError("graph order " + std::to_string(n) + " outside [0, 62]");
  words_.assign(word_count(n), 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  std::size_t bits = g.bit_count();
  for (std::size_t k = 0; k < bits; ++k) g.set_bit(k);
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(0, n - 1);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::size() const noexcept {
  int m = 0;
  for (auto w : words_) m += std::popcount(w);
  return m;
}

bool Graph::has_edge(int i, int j) const noexcept {
  if (i == j) return false;
  return bit(pair_index(i, j));
}

void Graph::add_edge(int i, int j) {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i == j) throw DomainError("self-loop on vertex " + std::to_string(i));
  set_bit(pair_index(i, j));
}

void Graph::remove_edge(int i, int j) {
  check_vertex(*this, i);
  check_vertex(*this, j);
  if (i != j) clear_bit(pair_index(i, j));
}

VertexSet Graph::neighbors(int v) const noexcept {
  VertexSet s = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && bit(pair_index(u, v))) s |= VertexSet{1} << u;
  return s;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  return a.n_ == b.n_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(),
                                                b.words_.begin(), b.words_.end());
}

Adjacency::Adjacency(const Graph& g) : n(g.order()) {
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.bit(k)) {
        row[i] |= VertexSet{1} << j;
        row[j] |= VertexSet{1} << i;
      }
    }
  }
}

Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte " + std::to_string(c) + " outside [63, 126] at offset " +
                           std::to_string(i),
                       i);
  }
  int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > Graph::kMaxOrder)
    throw ParseError("graph6: length byte encodes order " + std::to_string(n) +
                         " (multi-byte orders unsupported) at offset 0",
                     0);
  Graph g(n);
  std::size_t bits = g.bit_count();
  std::size_t groups = (bits + 5) / 6;
  if (text.size() != 1 + groups)
    throw ParseError("graph6: body has " + std::to_string(text.size() - 1) + " bytes, expected " +
                         std::to_string(groups) + " at offset " + std::to_string(text.size()),
                     std::min(text.size(), 1 + groups));
  for (std::size_t gi = 0; gi < groups; ++gi) {
    unsigned value = static_cast<unsigned char>(text[1 + gi]) - 63;
    for (int b = 0; b < 6; ++b) {
      std::size_t k = gi * 6 + b;
      bool on = (value >> (5 - b)) & 1u;
      if (k >= bits) {
        if (on)
          throw ParseError("graph6: non-zero padding bit at offset " + std::to_string(1 + gi),
                           1 + gi);
      } else if (on) {
        g.set_bit(k);
      }
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::size_t bits = g.bit_count();
  std::size_t groups = (bits + 5) / 6;
  std::string out;
  out.reserve(1 + groups);
  out.push_back(static_cast<char>(63 + g.order()));
  for (std::size_t gi = 0; gi < groups; ++gi) {
    unsigned value = 0;
    for (int b = 0; b < 6; ++b) {
      std::size_t k = gi * 6 + b;
      value = (value << 1) | (k < bits && g.bit(k) ? 1u : 0u);
    }
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph h(g.order());
  std::size_t bits = g.bit_count();
  for (std::size_t k = 0; k < bits; ++k)
    if (!g.bit(k)) h.set_bit(k);
  return h;
}

Graph add_vertex(const Graph& g, VertexSet neighbors) {
  int n = g.order();
  if (n + 1 > Graph::kMaxOrder) throw DomainError("add_vertex: order would exceed 62");
  if (n < 64 && (neighbors >> n) != 0) throw DomainError("add_vertex: neighbor outside graph");
  Graph h(n + 1);
  std::size_t bits = g.bit_count();
  for (std::size_t k = 0; k < bits; ++k)
    if (g.bit(k)) h.set_bit(k);
  // column n starts right after the old triangle
  for (int i = 0; i < n; ++i)
    if ((neighbors >> i) & 1u) h.set_bit(bits + i);
  return h;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw DomainError("relabel: permutation size mismatch");
  Graph h(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.bit(k)) h.set_bit(Graph::pair_index(perm[i], perm[j]));
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  std::vector<int> kept;
  for (int v = 0; v < g.order(); ++v)
    if ((keep >> v) & 1u) kept.push_back(v);
  Graph h(static_cast<int>(kept.size()));
  for (std::size_t b = 1; b < kept.size(); ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (g.has_edge(kept[a], kept[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.order();
  Graph h(na + b.order());
  for (int j = 1; j < na; ++j)
    for (int i = 0; i < j; ++i)
      if (a.has_edge(i, j)) h.add_edge(i, j);
  for (int j = 1; j < b.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (b.has_edge(i, j)) h.add_edge(na + i, na + j);
  return h;
}

std::vector<int> degree_sequence(const Graph& g) {
  Adjacency adj(g);
  std::vector<int> deg(g.order());
  for (int v = 0; v < g.order(); ++v) deg[v] = adj.degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

std::vector<std::vector<int>> components(const Graph& g) {
  Adjacency adj(g);
  std::vector<std::vector<int>> out;
  VertexSet unseen = adj.all();
  while (unseen) {
    int start = std::countr_zero(unseen);
    VertexSet comp = VertexSet{1} << start;
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= adj.row[std::countr_zero(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    unseen &= ~comp;
    std::vector<int> members;
    for (VertexSet c = comp; c; c &= c - 1) members.push_back(std::countr_zero(c));
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace pf

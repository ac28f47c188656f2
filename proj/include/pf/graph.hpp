#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace pf {

using VertexSet = std::uint64_t;  // bit v set <=> vertex v in the set

/// Simple undirected graph on at most 62 vertices.
///
/// Adjacency is an upper-triangular bit array in graph6 order: the pair
/// (i, j), i < j, sits at index j(j-1)/2 + i, i.e. column-major
/// (0,1) (0,2) (1,2) (0,3) ... Bits are packed MSB-first into 64-bit words,
/// so comparing the word arrays compares the bit strings lexicographically.
class Graph {
 public:
  static constexpr int kMaxOrder = 62;

  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  bool has_edge(int i, int j) const noexcept;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);

  /// Neighborhood of v as a bitmask.
  VertexSet neighbors(int v) const noexcept;

  std::size_t bit_count() const noexcept { return pair_count(n_); }
  std::span<const std::uint64_t> words() const noexcept { return {words_.data(), words_.size()}; }

  static constexpr std::size_t pair_count(int n) noexcept {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }
  static constexpr std::size_t pair_index(int i, int j) noexcept {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
  }

  bool bit(std::size_t k) const noexcept {
    return (words_[k >> 6] >> (63 - (k & 63))) & 1u;
  }
  void set_bit(std::size_t k) noexcept { words_[k >> 6] |= std::uint64_t{1} << (63 - (k & 63)); }
  void clear_bit(std::size_t k) noexcept {
    words_[k >> 6] &= ~(std::uint64_t{1} << (63 - (k & 63)));
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept;
  /// Order first, then adjacency bit string.
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b) noexcept;

 private:
  int n_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

/// Dense row-mask view used by the invariant and canonical-form kernels.
struct Adjacency {
  int n = 0;
  std::array<VertexSet, Graph::kMaxOrder> row{};

  explicit Adjacency(const Graph& g);
  VertexSet all() const noexcept { return n == 0 ? 0 : (~VertexSet{0} >> (64 - n)); }
  int degree(int v) const noexcept { return std::popcount(row[v]); }
};

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);
/// Appends vertex n adjacent exactly to `neighbors`.
Graph add_vertex(const Graph& g, VertexSet neighbors);
/// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);
/// Subgraph induced by `keep`, vertices renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// Disjoint union, b's vertices shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Ascending.
std::vector<int> degree_sequence(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

}  // namespace pf

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pf/graph.hpp"

namespace pf {

enum class GraphClass { all, connected, tree, chemical };

std::string_view to_string(GraphClass c);
/// Throws DomainError on an unknown name.
GraphClass parse_graph_class(std::string_view name);
bool in_class(const Graph& g, GraphClass c);

/// Kernel execution policy. `serial` is the reference path kept for testing
/// and benchmarking; `parallel` uses OpenMP when available.
enum class Exec { serial, parallel };

constexpr int kDefaultOrderCeiling = 9;
constexpr int kMaxOrderCeiling = 10;

/// One representative per isomorphism class of order n+1 reachable by adding
/// a vertex to a parent, each in canonical form, sorted by signature.
///
/// Only neighbor sets S with |S| <= min degree of the child are tried: every
/// graph has a minimum-degree vertex whose deletion leaves some parent, so
/// completeness over a complete parent list is unaffected.
std::vector<Graph> augment(std::span<const Graph> parents, Exec exec = Exec::parallel);

/// All isomorphism classes of order n in `cls`, canonical, sorted by
/// signature. Throws DomainError when n is outside [1, ceiling].
std::vector<Graph> enumerate_order(int n, GraphClass cls = GraphClass::all,
                                   int ceiling = kDefaultOrderCeiling,
                                   Exec exec = Exec::parallel);

/// Corpora for orders 1..n of class `all`; element i holds order i + 1.
std::vector<std::vector<Graph>> enumerate_up_to(int n, int ceiling = kDefaultOrderCeiling,
                                                Exec exec = Exec::parallel);

std::vector<Graph> filter_class(std::span<const Graph> graphs, GraphClass cls);

/// Corpus file name: order_{n}.g6 for `all`, order_{n}_{class}.g6 otherwise.
std::string corpus_file_name(int n, GraphClass cls);

}  // namespace pf

#pragma once

#include <string>
#include <vector>

#include "pf/graph.hpp"

namespace pf {

struct CanonicalResult {
  Graph canonical_graph;
  /// labeling[v] = position of input vertex v in canonical_graph.
  std::vector<int> labeling;
};

/// Canonical labeling by equitable refinement plus individualization.
///
/// Every leaf of the search tree is a discrete ordered partition, hence a
/// relabeling; the canonical graph is the relabeled graph whose adjacency bit
/// string (graph6 order) is lexicographically smallest over all leaves. The
/// target cell is the first smallest non-singleton cell. Automorphisms found
/// at equal leaves prune equivalent subtrees; the minimum does not depend on
/// the pruning.
CanonicalResult canonical_form(const Graph& g);

/// graph6 of the canonical form. Equal signatures <=> isomorphic graphs.
std::string signature(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace pf

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pf/errors.hpp"
#include "pf/graph.hpp"
#include "pf/problem.hpp"
#include "pf/rational.hpp"
#include "pf/store.hpp"

namespace pf {

/// d = floor((2n + 1 - sqrt(17 + 8(m - n))) / 2), computed with an integer
/// square root. Throws DomainError on a negative radicand.
std::int64_t compute_d(std::int64_t n, std::int64_t m);

/// E_{n,m}: clique K_{n-d-1} plus path v_0 .. v_d, every clique vertex joined
/// to v_d and v_{d-1}, and the lowest-indexed m - n + 1 - C(n-d, 2) clique
/// vertices joined to v_{d-2}. Path vertex v_i is vertex i; the clique
/// occupies d+1 .. n-1. Requires d >= 3 and a feasible extra-join count.
Graph build_E(int n, int m);

/// Disjoint union of k cliques with sizes differing by at most one, larger
/// parts first.
Graph balanced_clique_union(int n, int k);

/// Clique on n - k vertices completely joined to a stable set of size k.
/// The stable set is vertices 0 .. k-1.
Graph complete_split_graph(int n, int k);

enum class Direction { max, min };
Direction parse_direction(std::string_view s);
std::string_view to_string(Direction d);

struct ExtremalReport {
  std::string objective;
  Direction direction = Direction::max;
  Rational optimum;
  std::vector<std::string> witnesses;  // signatures, corpus order
};

/// Exact optimum of `objective` over the constraint-filtered corpus of the
/// given order and class, with every graph attaining it. Graphs where the
/// objective is undefined are skipped. Throws DomainError when nothing is
/// left to optimize over.
ExtremalReport extremal_search(const Store& store, int order, GraphClass cls,
                               std::span<const Constraint> constraints,
                               std::string_view objective, Direction direction);

/// Same search driven by a ProblemSpec's order, class and constraints.
ExtremalReport extremal_search(const Store& store, const ProblemSpec& spec,
                               std::string_view objective, Direction direction);

}  // namespace pf

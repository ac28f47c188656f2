#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pf/enumerate.hpp"
#include "pf/graph.hpp"
#include "pf/rational.hpp"

namespace pf {

enum class InvariantKind { numeric, boolean };
enum class InvariantDomain { all, connected_only };

struct InvariantDescriptor {
  std::string id;
  std::string display_name;
  InvariantKind kind;
  InvariantDomain domain;
};

/// monostate = undefined.
using InvariantValue = std::variant<std::monostate, Rational, bool>;

inline bool is_undefined(const InvariantValue& v) {
  if (std::holds_alternative<std::monostate>(v)) return true;
  if (auto* r = std::get_if<Rational>(&v)) return !r->defined();
  return false;
}
std::string to_string(const InvariantValue& v);

std::string_view to_string(InvariantKind k);
std::string_view to_string(InvariantDomain d);

/// The fixed registry, in display order.
const std::vector<InvariantDescriptor>& registry();
/// nullptr when unknown.
const InvariantDescriptor* find_invariant(std::string_view id);
/// Throws DomainError when unknown.
const InvariantDescriptor& invariant(std::string_view id);
std::vector<std::string> all_invariant_ids();

InvariantValue eval(std::string_view id, const Graph& g);

/// Evaluates one invariant over a corpus. Row i of the result belongs to
/// graphs[i] for either policy.
std::vector<InvariantValue> evaluate_column(std::string_view id, std::span<const Graph> graphs,
                                            Exec exec = Exec::parallel);

// Individual invariants. Connected-only ones return Rational::undefined() on
// disconnected input.
Rational eccentric_connectivity_index(const Graph& g);
Rational diameter(const Graph& g);
Rational radius(const Graph& g);
std::vector<int> eccentricities(const Graph& g);  // empty when disconnected

/// Stable sets including the empty one (Fibonacci index).
Rational stable_set_count(const Graph& g);
/// Matchings including the empty one.
Rational matching_count(const Graph& g);
Rational matching_number(const Graph& g);
Rational chromatic_number(const Graph& g);
/// (clique number, independence number)
std::pair<Rational, Rational> clique_and_independence(const Graph& g);

/// profile[k] = number of partitions of V into exactly k nonempty stable sets.
std::map<int, BigInt> color_partition_profile(const Graph& g);
Rational nonequiv_colorings(const Graph& g);
Rational avg_colors(const Graph& g);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

}  // namespace pf

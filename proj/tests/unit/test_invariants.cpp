#include "doctest.h"

#include <random>
#include <set>

#include "oracles/invariant_check.hpp"
#include "pf/conjectures.hpp"
#include "pf/enumerate.hpp"
#include "pf/errors.hpp"
#include "pf/invariants.hpp"

using pf::Graph;
using pf::Rational;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Rational value(std::string_view id, const Graph& g) { return std::get<Rational>(pf::eval(id, g)); }

}  // namespace

TEST_CASE("registry") {
  const auto& reg = pf::registry();
  CHECK(reg.size() == 23);
  std::set<std::string> ids;
  for (const auto& d : reg) ids.insert(d.id);
  CHECK(ids.size() == reg.size());
  CHECK(pf::invariant("chromatic_number").kind == pf::InvariantKind::numeric);
  CHECK(pf::invariant("chromatic_number").domain == pf::InvariantDomain::all);
  CHECK(pf::invariant("diameter").domain == pf::InvariantDomain::connected_only);
  CHECK(pf::invariant("connected").kind == pf::InvariantKind::boolean);
  CHECK(pf::find_invariant("girth") == nullptr);
  CHECK_THROWS_AS(pf::invariant("girth"), pf::DomainError);
  CHECK_THROWS_AS(pf::eval("girth", Graph(3)), pf::DomainError);
}

TEST_CASE("named values") {
  CHECK(value("chromatic_number", Graph::complete(7)) == 7);
  CHECK(value("independence_number", Graph(5)) == 5);
  CHECK(pf::is_undefined(pf::eval("diameter", pf::disjoint_union(Graph::complete(2), Graph(1)))));
  CHECK(value("clique_number", Graph::cycle(5)) == 2);
  CHECK(pf::eccentric_connectivity_index(Graph::complete(7)) == 42);
  CHECK(pf::eccentric_connectivity_index(Graph::path(3)) == 6);
  CHECK(pf::eccentric_connectivity_index(pf::build_E(7, 15)) == 65);
  CHECK(pf::stable_set_count(Graph::path(4)) == 8);
  CHECK(pf::matching_count(Graph::path(3)) == 3);
  CHECK(pf::matching_count(Graph::complete(3)) == 4);
  CHECK(pf::matching_count(Graph(6)) == 1);
  CHECK(pf::chromatic_number(Graph(4)) == 1);
  CHECK(pf::chromatic_number(Graph::cycle(5)) == 3);
  CHECK(pf::chromatic_number(petersen()) == 3);
  auto [w, a] = pf::clique_and_independence(Graph::complete(7));
  CHECK(w == 7);
  CHECK(a == 1);
  auto [w5, a5] = pf::clique_and_independence(Graph::cycle(5));
  CHECK(w5 == 2);
  CHECK(a5 == 2);
  CHECK(pf::clique_and_independence(pf::complete_split_graph(7, 3)).second == 3);
}

TEST_CASE("color partition profile") {
  using Profile = std::map<int, pf::BigInt>;
  CHECK(pf::color_partition_profile(Graph::complete(3)) == Profile{{3, 1}});
  CHECK(pf::color_partition_profile(Graph(3)) == Profile{{1, 1}, {2, 3}, {3, 1}});
  CHECK(pf::color_partition_profile(Graph::path(3)) == Profile{{2, 1}, {3, 1}});
  CHECK(pf::nonequiv_colorings(Graph::path(3)) == 2);
  CHECK(pf::avg_colors(Graph::path(3)) == Rational(5, 2));
}

TEST_CASE("Fibonacci, Bell and complete-graph identities") {
  std::int64_t fib[12] = {0, 1, 1};
  for (int i = 3; i < 12; ++i) fib[i] = fib[i - 1] + fib[i - 2];
  for (int n = 1; n <= 9; ++n) CHECK(pf::stable_set_count(Graph::path(n)) == fib[n + 2]);

  const std::int64_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  for (int n = 1; n <= 8; ++n) {
    CHECK(pf::nonequiv_colorings(Graph(n)) == bell[n]);
    CHECK(pf::nonequiv_colorings(Graph::complete(n)) == 1);
    CHECK(pf::stable_set_count(Graph(n)) == std::int64_t{1} << n);
    CHECK(pf::stable_set_count(Graph::complete(n)) == n + 1);
    CHECK(pf::eccentric_connectivity_index(Graph::complete(n)) == n * (n - 1));
  }
}

TEST_CASE("every invariant matches its oracle on all graphs up to order 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : pf::enumerate_order(n)) {
      auto bad = oracle::invariant_mismatches(g);
      CAPTURE(pf::to_graph6(g));
      CHECK(bad.empty());
      for (const auto& b : bad) MESSAGE(b);
    }
}

TEST_CASE("oracle agreement on random larger graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(8, 9)(rng);
    std::bernoulli_distribution edge(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    Graph g(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (edge(rng)) g.add_edge(i, j);
    CAPTURE(pf::to_graph6(g));
    CHECK(oracle::invariant_mismatches(g).empty());
  }
}

TEST_CASE("structural properties over the order-8 corpus") {
  auto eight = pf::enumerate_order(8);
  for (const auto& g : eight) {
    auto chi = value("chromatic_number", g), omega = value("clique_number", g);
    CHECK(chi >= omega);
    bool connected = std::get<bool>(pf::eval("connected", g));
    for (const char* id : {"diameter", "radius", "eccentric_connectivity_index"})
      CHECK(pf::is_undefined(pf::eval(id, g)) == !connected);
    CHECK(value("matching_number", g) * 2 <= Rational(8));
    if (g.size() >= 1) CHECK(value("matching_count", g) >= Rational(g.size() + 1));
  }
}

TEST_CASE("serial and parallel column evaluation agree") {
  auto seven = pf::enumerate_order(7);
  for (const auto& id : pf::all_invariant_ids())
    CHECK(pf::evaluate_column(id, seven, pf::Exec::serial) == pf::evaluate_column(id, seven, pf::Exec::parallel));
}

TEST_CASE("counting kernels beyond the corpus ceiling") {
  CHECK(pf::stable_set_count(Graph(62)).str() == "4611686018427387904");
  CHECK(pf::matching_count(Graph::complete(12)) == 140152);
  CHECK(pf::matching_count(Graph(62)) == 1);
}

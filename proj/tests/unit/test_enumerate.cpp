#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles/oracles.hpp"
#include "pf/canon.hpp"
#include "pf/enumerate.hpp"
#include "pf/errors.hpp"

using pf::Exec;
using pf::Graph;
using pf::GraphClass;

namespace {

std::vector<std::string> signatures(const std::vector<Graph>& gs) {
  std::vector<std::string> out;
  for (const auto& g : gs) out.push_back(pf::to_graph6(g));
  return out;
}

const std::vector<std::vector<Graph>>& corpus() {
  static const auto c = pf::enumerate_up_to(8);
  return c;
}

}  // namespace

TEST_CASE("augment examples") {
  std::vector<Graph> k1{Graph(1)};
  auto two = pf::augment(k1);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == Graph(2));
  CHECK(two[1] == Graph::complete(2));
  CHECK(pf::augment(corpus()[2]).size() == 11);
  CHECK(pf::augment(corpus()[5]).size() == 1044);
}

TEST_CASE("class counts match the orbit-counting oracle, n = 1..8") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(corpus()[n - 1].size() == oracle::burnside_graph_count(n));
  }
}

TEST_CASE("n = 9 matches the orbit-counting oracle") {
  auto nine = pf::enumerate_order(9);
  CHECK(nine.size() == 274668);
  CHECK(nine.size() == oracle::burnside_graph_count(9));
}

TEST_CASE("output is canonical, sorted and duplicate-free") {
  for (const auto& level : corpus()) {
    auto sigs = signatures(level);
    CHECK(std::is_sorted(sigs.begin(), sigs.end()));
    CHECK(std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end());
    for (std::size_t i = 0; i < level.size(); i += 97) CHECK(pf::signature(level[i]) == sigs[i]);
  }
}

TEST_CASE("serial and parallel augmentation agree") {
  for (int n : {5, 6, 7}) {
    auto s = pf::augment(corpus()[n - 1], Exec::serial);
    auto p = pf::augment(corpus()[n - 1], Exec::parallel);
    CHECK(s == p);
    CHECK(s == corpus()[n]);
  }
}

TEST_CASE("trees match Pruefer enumeration up to isomorphism") {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> classes;
    oracle::for_each_labeled_tree(n, [&](const oracle::Dense& d) { classes.insert(oracle::tree_code(d)); });
    auto trees = pf::enumerate_order(n, GraphClass::tree);
    CAPTURE(n);
    CHECK(trees.size() == classes.size());
    for (const auto& t : trees) {
      auto d = oracle::Dense::of(t);
      CHECK(d.edges() == n - 1);
      CHECK(oracle::components(d) == 1);
    }
  }
  CHECK(pf::enumerate_order(7, GraphClass::tree).size() == 11);
}

TEST_CASE("connected and chemical filters") {
  const auto& seven = corpus()[6];
  std::size_t connected = 0, chemical = 0;
  for (const auto& g : seven) {
    auto d = oracle::Dense::of(g);
    if (oracle::components(d) != 1) continue;
    ++connected;
    int max_deg = 0;
    for (int v = 0; v < 7; ++v) max_deg = std::max(max_deg, d.degree(v));
    chemical += max_deg <= 4;
  }
  CHECK(connected == 853);
  CHECK(pf::enumerate_order(7, GraphClass::connected).size() == connected);
  auto chem = pf::enumerate_order(7, GraphClass::chemical);
  CHECK(chem.size() == chemical);
  for (const auto& g : chem) CHECK(pf::in_class(g, GraphClass::connected));
}

TEST_CASE("determinism") {
  CHECK(signatures(pf::enumerate_order(7)) == signatures(pf::enumerate_order(7, GraphClass::all, 9, Exec::serial)));
}

TEST_CASE("order ceiling and class names") {
  CHECK_THROWS_AS(pf::enumerate_order(0), pf::DomainError);
  CHECK_THROWS_AS(pf::enumerate_order(10), pf::DomainError);
  CHECK_THROWS_AS(pf::enumerate_order(11, GraphClass::all, 10), pf::DomainError);
  CHECK_THROWS_AS(pf::enumerate_order(4, GraphClass::all, 11), pf::DomainError);
  CHECK(pf::parse_graph_class("chemical") == GraphClass::chemical);
  CHECK_THROWS_AS(pf::parse_graph_class("planar"), pf::DomainError);
  CHECK(pf::corpus_file_name(7, GraphClass::all) == "order_7.g6");
  CHECK(pf::corpus_file_name(7, GraphClass::tree) == "order_7_tree.g6");
  CHECK(pf::enumerate_order(1).size() == 1);
}

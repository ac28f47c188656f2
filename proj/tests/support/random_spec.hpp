#pragma once

#include <random>
#include <vector>

#include "pf/invariants.hpp"
#include "pf/problem.hpp"

namespace support {

inline std::vector<std::string> ids_of(pf::InvariantKind kind) {
  std::vector<std::string> out;
  for (const auto& d : pf::registry())
    if (d.kind == kind) out.push_back(d.id);
  return out;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

inline pf::Rational random_rational(std::mt19937_64& rng, int span = 30) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  return pf::Rational(num(rng), den(rng));
}

// A spec that passes validate(): numeric axes, kind-matched constraints and
// highlight, orders drawn from `orders`.
inline pf::ProblemSpec random_valid_spec(std::mt19937_64& rng, const std::vector<int>& orders,
                                         pf::GraphClass cls = pf::GraphClass::all) {
  static const auto numeric = ids_of(pf::InvariantKind::numeric);
  static const auto boolean = ids_of(pf::InvariantKind::boolean);
  static const auto all = pf::all_invariant_ids();
  std::bernoulli_distribution coin(0.5);
  pf::ProblemSpec s;
  s.x = pick(rng, numeric);
  s.y = pick(rng, numeric);
  s.order = pick(rng, orders);
  s.graph_class = cls;
  int constraints = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < constraints; ++i) {
    if (coin(rng)) {
      pf::ConstraintOp op = pick(rng, std::vector{pf::ConstraintOp::le, pf::ConstraintOp::ge, pf::ConstraintOp::eq,
                                                  pf::ConstraintOp::lt, pf::ConstraintOp::gt});
      s.constraints.push_back({pick(rng, numeric), op, pf::Rational(std::uniform_int_distribution<int>(0, 12)(rng))});
    } else {
      s.constraints.push_back({pick(rng, boolean), coin(rng) ? pf::ConstraintOp::is_true : pf::ConstraintOp::is_false, {}});
    }
  }
  if (coin(rng)) s.coloration = pick(rng, all);
  if (coin(rng)) {
    if (coin(rng)) s.highlight = pf::HighlightRule{pick(rng, numeric), pf::Rational(std::uniform_int_distribution<int>(0, 6)(rng))};
    else s.highlight = pf::HighlightRule{pick(rng, boolean), coin(rng)};
  }
  int extras = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int i = 0; i < extras; ++i) {
    auto id = pick(rng, all);
    if (std::find(s.extra_invariants.begin(), s.extra_invariants.end(), id) == s.extra_invariants.end())
      s.extra_invariants.push_back(id);
  }
  return s;
}

// Structurally well-formed but not necessarily valid: arbitrary ids, ops,
// targets, classes and orders.
inline pf::ProblemSpec random_spec(std::mt19937_64& rng) {
  static const auto all = pf::all_invariant_ids();
  static const std::vector<pf::GraphClass> classes{pf::GraphClass::all, pf::GraphClass::connected,
                                                   pf::GraphClass::tree, pf::GraphClass::chemical};
  static const std::vector<pf::ConstraintOp> ops{pf::ConstraintOp::le, pf::ConstraintOp::ge, pf::ConstraintOp::eq,
                                                 pf::ConstraintOp::lt, pf::ConstraintOp::gt, pf::ConstraintOp::is_true,
                                                 pf::ConstraintOp::is_false};
  std::bernoulli_distribution coin(0.5);
  pf::ProblemSpec s;
  s.x = pick(rng, all);
  s.y = pick(rng, all);
  s.order = std::uniform_int_distribution<int>(-5, 100)(rng);
  s.graph_class = pick(rng, classes);
  int constraints = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int i = 0; i < constraints; ++i) {
    pf::Constraint c{pick(rng, all), pick(rng, ops), {}};
    if (c.op != pf::ConstraintOp::is_true && c.op != pf::ConstraintOp::is_false) c.target = random_rational(rng, 1000);
    s.constraints.push_back(c);
  }
  if (coin(rng)) s.coloration = pick(rng, all);
  if (coin(rng)) {
    pf::InvariantValue target = coin(rng) ? pf::InvariantValue(random_rational(rng)) : pf::InvariantValue(coin(rng));
    s.highlight = pf::HighlightRule{pick(rng, all), target};
  }
  int extras = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int i = 0; i < extras; ++i) s.extra_invariants.push_back(pick(rng, all));
  return s;
}

}  // namespace support

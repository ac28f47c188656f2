#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "pf/enumerate.hpp"
#include "pf/invariants.hpp"
#include "pf/rational.hpp"

namespace pf {

enum class ConstraintOp { le, ge, eq, lt, gt, is_true, is_false };

std::string_view to_string(ConstraintOp op);
ConstraintOp parse_constraint_op(std::string_view name);

struct Constraint {
  std::string invariant;
  ConstraintOp op = ConstraintOp::eq;
  Rational target;  // numeric ops only

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Parses the CLI grammar ID<=V, ID>=V, ID=V, ID<V, ID>V, ID=true, ID=false.
/// Only syntax is checked here; kinds are checked by validate().
Constraint parse_constraint(std::string_view text);

/// Does `value` satisfy the constraint? Undefined values never do.
bool satisfies(const Constraint& c, const InvariantValue& value);

struct HighlightRule {
  std::string invariant;
  InvariantValue target;  // Rational for numeric, bool for boolean

  friend bool operator==(const HighlightRule&, const HighlightRule&) = default;
};

/// Parses ID=V where V is a rational or true/false.
HighlightRule parse_highlight(std::string_view text);

struct ProblemSpec {
  std::string x;
  std::string y;
  int order = 1;
  GraphClass graph_class = GraphClass::all;
  std::vector<Constraint> constraints{};
  std::optional<std::string> coloration{};
  std::optional<HighlightRule> highlight{};
  std::vector<std::string> extra_invariants{};

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Constraint ids exist and each operator matches its invariant's kind.
void validate(std::span<const Constraint> constraints);

/// Checks ids against the registry and op/target kinds against the
/// invariant kinds. Throws DomainError.
void validate(const ProblemSpec& spec);

/// Canonical JSON: sorted keys, optional members omitted when absent,
/// rationals as "num/den" strings.
nlohmann::json to_json(const ProblemSpec& spec);
/// Throws ParseError on structural problems.
ProblemSpec problem_from_json(const nlohmann::json& j);

/// URL-safe base64 (no padding) of the canonical compact JSON.
std::string encode_problem(const ProblemSpec& spec);
/// Throws ParseError on malformed input.
ProblemSpec decode_problem(std::string_view encoded);

std::string base64url_encode(std::string_view bytes);
std::string base64url_decode(std::string_view text);

}  // namespace pf

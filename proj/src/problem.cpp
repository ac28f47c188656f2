#include "pf/problem.hpp"

#include <array>

#include "pf/errors.hpp"

namespace pf {

namespace {

using nlohmann::json;

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

bool is_boolean_op(ConstraintOp op) {
  return op == ConstraintOp::is_true || op == ConstraintOp::is_false;
}

json value_to_json(const InvariantValue& v) {
  if (auto* b = std::get_if<bool>(&v)) return *b;
  if (auto* r = std::get_if<Rational>(&v); r && r->defined()) return r->str();
  return nullptr;
}

InvariantValue value_from_json(const json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("highlight target must be a rational string or a boolean");
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("problem: missing '") + key + "'");
  return *it;
}

std::string string_member(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_string()) throw ParseError(std::string("problem: '") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string_view to_string(ConstraintOp op) {
  switch (op) {
    case ConstraintOp::le: return "le";
    case ConstraintOp::ge: return "ge";
    case ConstraintOp::eq: return "eq";
    case ConstraintOp::lt: return "lt";
    case ConstraintOp::gt: return "gt";
    case ConstraintOp::is_true: return "is_true";
    case ConstraintOp::is_false: return "is_false";
  }
  return "eq";
}

ConstraintOp parse_constraint_op(std::string_view name) {
  for (auto op : {ConstraintOp::le, ConstraintOp::ge, ConstraintOp::eq, ConstraintOp::lt,
                  ConstraintOp::gt, ConstraintOp::is_true, ConstraintOp::is_false})
    if (to_string(op) == name) return op;
  throw ParseError("unknown constraint operator '" + std::string(name) + "'");
}

Constraint parse_constraint(std::string_view text) {
  auto pos = text.find_first_of("<>=");
  if (pos == std::string_view::npos || pos == 0)
    throw ParseError("constraint '" + std::string(text) + "' is not of the form ID<op>VALUE");
  std::string id(text.substr(0, pos));
  std::string_view rest = text.substr(pos);
  Constraint c{id, ConstraintOp::eq, {}};
  std::string_view value;
  if (rest.starts_with("<=")) {
    c.op = ConstraintOp::le;
    value = rest.substr(2);
  } else if (rest.starts_with(">=")) {
    c.op = ConstraintOp::ge;
    value = rest.substr(2);
  } else if (rest.starts_with("<")) {
    c.op = ConstraintOp::lt;
    value = rest.substr(1);
  } else if (rest.starts_with(">")) {
    c.op = ConstraintOp::gt;
    value = rest.substr(1);
  } else {
    value = rest.substr(1);
    if (value == "true" || value == "false") {
      c.op = value == "true" ? ConstraintOp::is_true : ConstraintOp::is_false;
      return c;
    }
  }
  c.target = Rational::parse(value);
  return c;
}

bool satisfies(const Constraint& c, const InvariantValue& value) {
  if (is_boolean_op(c.op)) {
    auto* b = std::get_if<bool>(&value);
    return b && *b == (c.op == ConstraintOp::is_true);
  }
  auto* r = std::get_if<Rational>(&value);
  if (!r || !r->defined()) return false;
  switch (c.op) {
    case ConstraintOp::le: return *r <= c.target;
    case ConstraintOp::ge: return *r >= c.target;
    case ConstraintOp::eq: return *r == c.target;
    case ConstraintOp::lt: return *r < c.target;
    case ConstraintOp::gt: return *r > c.target;
    default: return false;
  }
}

HighlightRule parse_highlight(std::string_view text) {
  auto pos = text.find('=');
  if (pos == std::string_view::npos || pos == 0 || pos + 1 == text.size())
    throw ParseError("highlight '" + std::string(text) + "' is not of the form ID=VALUE");
  std::string_view value = text.substr(pos + 1);
  HighlightRule h{std::string(text.substr(0, pos)), {}};
  if (value == "true" || value == "false") h.target = value == "true";
  else h.target = Rational::parse(value);
  return h;
}

void validate(std::span<const Constraint> constraints) {
  for (const auto& c : constraints) {
    const auto& d = invariant(c.invariant);
    bool numeric = d.kind == InvariantKind::numeric;
    if (numeric == is_boolean_op(c.op))
      throw DomainError("constraint operator '" + std::string(to_string(c.op)) +
                        "' does not match the " + std::string(to_string(d.kind)) +
                        " invariant '" + c.invariant + "'");
    if (numeric && !c.target.defined())
      throw DomainError("constraint on '" + c.invariant + "' has an undefined target");
  }
}

void validate(const ProblemSpec& spec) {
  for (const auto* axis : {&spec.x, &spec.y}) {
    if (invariant(*axis).kind != InvariantKind::numeric)
      throw DomainError("axis invariant '" + *axis + "' is not numeric");
  }
  if (spec.order < 1) throw DomainError("order must be positive");
  validate(spec.constraints);
  if (spec.coloration) invariant(*spec.coloration);
  if (spec.highlight) {
    const auto& d = invariant(spec.highlight->invariant);
    bool numeric_target = std::holds_alternative<Rational>(spec.highlight->target);
    if ((d.kind == InvariantKind::numeric) != numeric_target || is_undefined(spec.highlight->target))
      throw DomainError("highlight target does not match the " + std::string(to_string(d.kind)) +
                        " invariant '" + d.id + "'");
  }
  for (const auto& e : spec.extra_invariants) invariant(e);
}

json to_json(const ProblemSpec& spec) {
  json j = json::object();
  j["x"] = spec.x;
  j["y"] = spec.y;
  j["order"] = spec.order;
  j["class"] = std::string(to_string(spec.graph_class));
  json cs = json::array();
  for (const auto& c : spec.constraints) {
    json cj = {{"invariant", c.invariant}, {"op", std::string(to_string(c.op))}};
    if (!is_boolean_op(c.op)) cj["target"] = c.target.str();
    cs.push_back(std::move(cj));
  }
  j["constraints"] = std::move(cs);
  if (spec.coloration) j["coloration"] = *spec.coloration;
  if (spec.highlight)
    j["highlight"] = {{"invariant", spec.highlight->invariant},
                      {"target", value_to_json(spec.highlight->target)}};
  if (!spec.extra_invariants.empty()) j["extra_invariants"] = spec.extra_invariants;
  return j;
}

ProblemSpec problem_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("problem must be a JSON object");
  static const std::array<std::string_view, 8> known = {
      "x", "y", "order", "class", "constraints", "coloration", "highlight", "extra_invariants"};
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError("problem: unknown member '" + key + "'");

  ProblemSpec spec;
  spec.x = string_member(j, "x");
  spec.y = string_member(j, "y");
  const json& order = member(j, "order");
  if (!order.is_number_integer()) throw ParseError("problem: 'order' must be an integer");
  spec.order = order.get<int>();
  if (j.contains("class")) {
    try {
      spec.graph_class = parse_graph_class(string_member(j, "class"));
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("constraints")) {
    const json& cs = j["constraints"];
    if (!cs.is_array()) throw ParseError("problem: 'constraints' must be an array");
    for (const auto& cj : cs) {
      if (!cj.is_object()) throw ParseError("problem: constraint must be an object");
      Constraint c;
      c.invariant = string_member(cj, "invariant");
      c.op = parse_constraint_op(string_member(cj, "op"));
      if (!is_boolean_op(c.op)) c.target = Rational::parse(string_member(cj, "target"));
      spec.constraints.push_back(std::move(c));
    }
  }
  if (j.contains("coloration")) spec.coloration = string_member(j, "coloration");
  if (j.contains("highlight")) {
    const json& h = j["highlight"];
    if (!h.is_object()) throw ParseError("problem: 'highlight' must be an object");
    spec.highlight = HighlightRule{string_member(h, "invariant"), value_from_json(member(h, "target"))};
  }
  if (j.contains("extra_invariants")) {
    const json& e = j["extra_invariants"];
    if (!e.is_array()) throw ParseError("problem: 'extra_invariants' must be an array");
    for (const auto& id : e) {
      if (!id.is_string()) throw ParseError("problem: extra invariant ids must be strings");
      spec.extra_invariants.push_back(id.get<std::string>());
    }
  }
  return spec;
}

std::string encode_problem(const ProblemSpec& spec) { return base64url_encode(to_json(spec).dump()); }

ProblemSpec decode_problem(std::string_view encoded) {
  std::string text = base64url_decode(encoded);
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("problem encoding does not contain valid JSON");
  return problem_from_json(j);
}

std::string base64url_encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16) |
                      (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                      static_cast<unsigned char>(bytes[i + 2]);
    for (int s = 18; s >= 0; s -= 6) out.push_back(kAlphabet[(v >> s) & 63]);
  }
  std::size_t rest = bytes.size() - i;
  if (rest > 0) {
    std::uint32_t v = static_cast<unsigned char>(bytes[i]) << 16;
    if (rest == 2) v |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    out.push_back(kAlphabet[(v >> 18) & 63]);
    out.push_back(kAlphabet[(v >> 12) & 63]);
    if (rest == 2) out.push_back(kAlphabet[(v >> 6) & 63]);
  }
  return out;
}

std::string base64url_decode(std::string_view text) {
  while (!text.empty() && text.back() == '=') text.remove_suffix(1);
  if (text.size() % 4 == 1) throw ParseError("base64url: invalid length", text.size());
  std::string out;
  std::uint32_t acc = 0;
  int bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto pos = kAlphabet.find(text[i]);
    if (pos == std::string_view::npos)
      throw ParseError("base64url: invalid character at offset " + std::to_string(i), i);
    acc = (acc << 6) | static_cast<std::uint32_t>(pos);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((acc >> bits) & 0xFF));
    }
  }
  if (bits > 0 && (acc & ((1u << bits) - 1)) != 0)
    throw ParseError("base64url: non-zero trailing bits", text.size());
  return out;
}

}  // namespace pf

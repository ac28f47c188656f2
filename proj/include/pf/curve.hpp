#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pf/errors.hpp"
#include "pf/polytope.hpp"

namespace pf::curve {

/// Evaluation failure: division by zero, sqrt of a negative, non-finite result.
class EvalError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Func { sqrt, floor, ceil, abs };
enum class BinOp { add, sub, mul, div, pow };
enum class Var { x, n };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  double value;
};
struct Variable {
  Var var;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  BinOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Call {
  Func func;
  ExprPtr arg;
};

struct Expr {
  std::variant<Number, Variable, Negate, Binary, Call> node;
};

/// Grammar (whitespace insignificant):
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | power
///   power := atom ('^' unary)?            right-associative
///   atom  := number | 'x' | 'n' | '(' expr ')' | func '(' expr ')'
///   func  := sqrt | floor | ceil | abs
/// So "-2^2" is -(2^2) and "2^3^2" is 2^(3^2).
/// Throws ParseError carrying the character offset.
ExprPtr parse(std::string_view text);

/// Fully parenthesized canonical text; parse(print(e)) is structurally e.
std::string print(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

double eval_expr(const Expr& e, double x, long long n);

enum class Side { upper, lower };
Side parse_side(std::string_view s);
std::string_view to_string(Side s);

constexpr double kAlignmentTolerance = 1e-9;

struct EnvelopeEntry {
  Rational x;
  Rational y;  // envelope value at x
  std::optional<double> curve;
  std::optional<double> residual;  // y - f(x, n)
  bool aligned = false;
  std::string error;  // evaluation error message when curve is empty
};

struct EnvelopeReport {
  Side side = Side::upper;
  std::vector<EnvelopeEntry> entries;  // ascending x
  bool all_aligned() const;
};

/// Per distinct x, the max (upper) or min (lower) y among the points,
/// compared against f(x, n). Throws DomainError on empty input.
EnvelopeReport check_envelope(std::span<const PolytopePoint> points, const Expr& e, long long n,
                              Side side);

}  // namespace pf::curve

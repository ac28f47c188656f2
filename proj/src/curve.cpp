#include "pf/curve.hpp"

#include <charconv>
#include <cmath>
#include <map>

namespace pf::curve {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression: " + what + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static ExprPtr make(auto node) { return std::make_shared<const Expr>(Expr{std::move(node)}); }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Binary{BinOp::add, lhs, term()});
      else if (accept('-')) lhs = make(Binary{BinOp::sub, lhs, term()});
      else return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Binary{BinOp::mul, lhs, unary()});
      else if (accept('/')) lhs = make(Binary{BinOp::div, lhs, unary()});
      else return lhs;
    }
  }

  ExprPtr unary() {
    if (accept('-')) return make(Negate{unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (accept('^')) return make(Binary{BinOp::pow, base, unary()});
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return make(Variable{Var::x});
      if (name == "n") return make(Variable{Var::n});
      std::optional<Func> f;
      if (name == "sqrt") f = Func::sqrt;
      else if (name == "floor") f = Func::floor;
      else if (name == "ceil") f = Func::ceil;
      else if (name == "abs") f = Func::abs;
      if (!f) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      ExprPtr arg = expr();
      if (!accept(')')) fail("expected ')'");
      return make(Call{*f, arg});
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExprPtr number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
      ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = save;
      }
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return make(Number{value});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* func_name(Func f) {
  switch (f) {
    case Func::sqrt: return "sqrt";
    case Func::floor: return "floor";
    case Func::ceil: return "ceil";
    case Func::abs: return "abs";
  }
  return "?";
}

char op_char(BinOp op) {
  switch (op) {
    case BinOp::add: return '+';
    case BinOp::sub: return '-';
    case BinOp::mul: return '*';
    case BinOp::div: return '/';
    case BinOp::pow: return '^';
  }
  return '?';
}

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw EvalError(std::string("non-finite result in ") + what);
  return v;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  return std::visit(
      overloaded{
          [](const Number& num) {
            char buf[64];
            auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), num.value);
            (void)ec;
            return std::string(buf, ptr);
          },
          [](const Variable& v) { return std::string(v.var == Var::x ? "x" : "n"); },
          [](const Negate& neg) { return "(-" + print(*neg.operand) + ")"; },
          [](const Binary& b) {
            return "(" + print(*b.lhs) + " " + op_char(b.op) + " " + print(*b.rhs) + ")";
          },
          [](const Call& c) { return std::string(func_name(c.func)) + "(" + print(*c.arg) + ")"; },
      },
      e.node);
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Number& x) { return x.value == std::get<Number>(b.node).value; },
          [&](const Variable& x) { return x.var == std::get<Variable>(b.node).var; },
          [&](const Negate& x) {
            return structurally_equal(*x.operand, *std::get<Negate>(b.node).operand);
          },
          [&](const Binary& x) {
            const auto& y = std::get<Binary>(b.node);
            return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                   structurally_equal(*x.rhs, *y.rhs);
          },
          [&](const Call& x) {
            const auto& y = std::get<Call>(b.node);
            return x.func == y.func && structurally_equal(*x.arg, *y.arg);
          },
      },
      a.node);
}

double eval_expr(const Expr& e, double x, long long n) {
  return std::visit(
      overloaded{
          [](const Number& num) { return num.value; },
          [&](const Variable& v) { return v.var == Var::x ? x : static_cast<double>(n); },
          [&](const Negate& neg) { return -eval_expr(*neg.operand, x, n); },
          [&](const Binary& b) {
            double l = eval_expr(*b.lhs, x, n);
            double r = eval_expr(*b.rhs, x, n);
            switch (b.op) {
              case BinOp::add: return checked(l + r, "addition");
              case BinOp::sub: return checked(l - r, "subtraction");
              case BinOp::mul: return checked(l * r, "multiplication");
              case BinOp::div:
                if (r == 0) throw EvalError("division by zero");
                return checked(l / r, "division");
              case BinOp::pow: return checked(std::pow(l, r), "power");
            }
            return 0.0;
          },
          [&](const Call& c) {
            double a = eval_expr(*c.arg, x, n);
            switch (c.func) {
              case Func::sqrt:
                if (a < 0) throw EvalError("sqrt of negative value");
                return std::sqrt(a);
              case Func::floor: return std::floor(a);
              case Func::ceil: return std::ceil(a);
              case Func::abs: return std::fabs(a);
            }
            return 0.0;
          },
      },
      e.node);
}

Side parse_side(std::string_view s) {
  if (s == "upper") return Side::upper;
  if (s == "lower") return Side::lower;
  throw ParseError("side must be 'upper' or 'lower'");
}

std::string_view to_string(Side s) { return s == Side::upper ? "upper" : "lower"; }

bool EnvelopeReport::all_aligned() const {
  for (const auto& e : entries)
    if (!e.aligned) return false;
  return true;
}

EnvelopeReport check_envelope(std::span<const PolytopePoint> points, const Expr& e, long long n,
                              Side side) {
  if (points.empty()) throw DomainError("envelope of an empty point set");
  std::map<Rational, Rational> env;
  for (const auto& p : points) {
    auto [it, fresh] = env.try_emplace(p.point.x, p.point.y);
    if (!fresh && (side == Side::upper ? p.point.y > it->second : p.point.y < it->second))
      it->second = p.point.y;
  }
  EnvelopeReport report;
  report.side = side;
  for (const auto& [x, y] : env) {
    EnvelopeEntry entry{x, y, std::nullopt, std::nullopt, false, {}};
    try {
      double f = eval_expr(e, x.to_double(), n);
      entry.curve = f;
      entry.residual = y.to_double() - f;
      entry.aligned = std::fabs(*entry.residual) <= kAlignmentTolerance;
    } catch (const EvalError& err) {
      entry.error = err.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace pf::curve

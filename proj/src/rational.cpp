#include "pf/rational.hpp"

#include <boost/functional/hash.hpp>
#include <algorithm>
#include <charconv>

#include "pf/errors.hpp"

namespace pf {

namespace {

void require_defined(const Rational& a, const Rational& b) {
  if (!a.defined() || !b.defined()) throw DomainError("arithmetic on undefined value");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Decimal digits to an integer. cpp_int's string constructor would read a
// leading zero as an octal prefix.
BigInt decimal(std::string_view digits) {
  digits.remove_prefix(std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? BigInt(0) : BigInt(std::string(digits));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

Rational Rational::undefined() {
  Rational r;
  r.den_ = 0;
  return r;
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt num, den(1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw fail();
    num = decimal(p);
    den = decimal(q);
    if (den == 0) throw fail();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
      throw fail();
    num = decimal(std::string(ip) + std::string(fp));
    den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(fp.size()));
  } else {
    if (!all_digits(s)) throw fail();
    num = decimal(s);
  }
  return Rational(negative ? BigInt(-num) : num, den);
}

std::string Rational::str() const {
  if (!defined()) return "undefined";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
  if (!defined()) throw DomainError("undefined value has no numeric conversion");
  if (den_ == 1) return num_.convert_to<double>();
  return static_cast<double>(boost::multiprecision::cpp_rational(num_, den_));
}

Rational Rational::operator-() const {
  if (!defined()) throw DomainError("arithmetic on undefined value");
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  require_defined(a, b);
  if (a.den_ == 1 && b.den_ == 1) return Rational(BigInt(a.num_ + b.num_));
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  require_defined(a, b);
  if (a.den_ == 1 && b.den_ == 1) return Rational(BigInt(a.num_ - b.num_));
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  require_defined(a, b);
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  require_defined(a, b);
  if (b.num_ == 0) throw DomainError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  require_defined(a, b);
  if (a.den_ == b.den_) return a.num_.compare(b.num_) <=> 0;
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  return lhs.compare(rhs) <=> 0;
}

std::size_t Rational::hash() const noexcept {
  std::size_t seed = boost::multiprecision::hash_value(num_);
  boost::hash_combine(seed, boost::multiprecision::hash_value(den_));
  return seed;
}

}  // namespace pf

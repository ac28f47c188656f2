#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pf {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction num/den in lowest terms with den > 0, or the distinguished
/// undefined value (stored as den == 0).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by intent
  Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  Rational(BigInt num, BigInt den);

  static Rational undefined();

  /// Accepts "k", "-k", "p/q" and plain decimals such as "2.5".
  static Rational parse(std::string_view text);

  bool defined() const noexcept { return den_ != 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  /// "k" when integral, "p/q" otherwise, "undefined" for the marker.
  std::string str() const;
  double to_double() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  /// Structural equality; undefined equals undefined.
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  /// Exact order by cross-multiplication. Throws on undefined operands.
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const noexcept;

 private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

struct RationalHash {
  std::size_t operator()(const Rational& r) const noexcept { return r.hash(); }
};

}  // namespace pf

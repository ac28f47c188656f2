#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pf/invariants.hpp"
#include "pf/rational.hpp"

namespace pf {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

enum class HighlightState { none, partial, full };
std::string_view to_string(HighlightState h);

/// Aggregated coloration of the graphs at one point.
struct PointColor {
  enum class Tag { absent, value, mixed };
  Tag tag = Tag::absent;
  InvariantValue value;  // meaningful when tag == value; may be undefined
};

struct PolytopePoint {
  Point2 point;
  std::uint64_t multiplicity = 0;
  PointColor color;
  HighlightState highlight = HighlightState::none;
};

/// One graph's contribution. `color` is absent when no coloration is
/// requested; `highlight` is absent when no highlighting is requested.
struct PointRow {
  Rational x;
  Rational y;
  std::optional<InvariantValue> color;
  std::optional<bool> highlight;
};

/// One point per distinct (x, y), sorted by (x, y).
std::vector<PolytopePoint> collect_points(std::span<const PointRow> rows);

enum class HullShape { point, segment, polygon };
std::string_view to_string(HullShape s);

struct Hull {
  HullShape shape = HullShape::point;
  /// Counterclockwise, starting at the lowest (x, y); strictly convex.
  std::vector<Point2> vertices;
};

/// Exact monotone-chain hull. Throws DomainError on empty input.
Hull convex_hull(std::span<const Point2> points);

/// Inequality a*x + b*y <= c with coprime integer coefficients.
struct Facet {
  BigInt a;
  BigInt b;
  BigInt c;

  friend bool operator==(const Facet&, const Facet&) = default;
};

std::vector<Facet> facets(const Hull& h);

bool satisfies(const Facet& f, const Point2& p);
bool on_facet(const Facet& f, const Point2& p);

/// Points lying on the facet's supporting line. Throws DomainError when the
/// facet is not one of facets(h).
std::vector<PolytopePoint> incident_points(const Hull& h, const Facet& f,
                                           std::span<const PolytopePoint> points);

}  // namespace pf

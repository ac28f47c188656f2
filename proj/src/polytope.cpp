#include "pf/polytope.hpp"

#include <algorithm>
#include <map>

#include "pf/errors.hpp"

namespace pf {

namespace {

// Sign of (b - a) x (c - a).
int orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross.num().sign();
}

BigInt lcm(const BigInt& a, const BigInt& b) { return a / boost::multiprecision::gcd(a, b) * b; }

// Scales a*x + b*y <= c to coprime integers; the sign is preserved.
Facet integer_facet(const Rational& a, const Rational& b, const Rational& c) {
  BigInt scale = lcm(lcm(a.den(), b.den()), c.den());
  BigInt ia = a.num() * (scale / a.den());
  BigInt ib = b.num() * (scale / b.den());
  BigInt ic = c.num() * (scale / c.den());
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(abs(ia), abs(ib)), abs(ic));
  if (g > 1) {
    ia /= g;
    ib /= g;
    ic /= g;
  }
  return {ia, ib, ic};
}

Rational lhs(const Facet& f, const Point2& p) { return Rational(f.a) * p.x + Rational(f.b) * p.y; }

}  // namespace

std::string_view to_string(HighlightState h) {
  switch (h) {
    case HighlightState::none: return "none";
    case HighlightState::partial: return "partial";
    case HighlightState::full: return "full";
  }
  return "none";
}

std::string_view to_string(HullShape s) {
  switch (s) {
    case HullShape::point: return "point";
    case HullShape::segment: return "segment";
    case HullShape::polygon: return "polygon";
  }
  return "point";
}

std::vector<PolytopePoint> collect_points(std::span<const PointRow> rows) {
  struct Acc {
    std::uint64_t count = 0;
    std::uint64_t highlighted = 0;
    bool has_highlight = false;
    PointColor color;
  };
  std::map<Point2, Acc> acc;
  for (const auto& row : rows) {
    Acc& a = acc[Point2{row.x, row.y}];
    if (row.color) {
      if (a.count == 0) {
        a.color = {PointColor::Tag::value, *row.color};
      } else if (a.color.tag == PointColor::Tag::value && a.color.value != *row.color) {
        a.color = {PointColor::Tag::mixed, {}};
      }
    }
    if (row.highlight) {
      a.has_highlight = true;
      if (*row.highlight) ++a.highlighted;
    }
    ++a.count;
  }
  std::vector<PolytopePoint> out;
  out.reserve(acc.size());
  for (auto& [pt, a] : acc) {
    HighlightState h = HighlightState::none;
    if (a.has_highlight && a.highlighted == a.count) h = HighlightState::full;
    else if (a.highlighted > 0) h = HighlightState::partial;
    out.push_back({pt, a.count, a.color, h});
  }
  return out;
}

Hull convex_hull(std::span<const Point2> points) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Hull h;
  if (pts.size() == 1) {
    h.shape = HullShape::point;
    h.vertices = pts;
    return h;
  }

  // Andrew's monotone chain; collinear points are popped (strict turns only).
  std::vector<Point2> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(chain[k - 2], chain[k - 1], p) <= 0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orientation(chain[k - 2], chain[k - 1], pts[i]) <= 0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);

  if (chain.size() == 2) {
    h.shape = HullShape::segment;
  } else {
    h.shape = HullShape::polygon;
  }
  h.vertices = std::move(chain);
  return h;
}

std::vector<Facet> facets(const Hull& h) {
  std::vector<Facet> out;
  const auto& v = h.vertices;
  switch (h.shape) {
    case HullShape::point: {
      const Point2& p = v.front();
      out.push_back(integer_facet(1, 0, p.x));
      out.push_back(integer_facet(-1, 0, -p.x));
      out.push_back(integer_facet(0, 1, p.y));
      out.push_back(integer_facet(0, -1, -p.y));
      break;
    }
    case HullShape::segment: {
      const Point2& p = v[0];
      const Point2& q = v[1];
      Rational dx = q.x - p.x, dy = q.y - p.y;
      // supporting line, both sides
      out.push_back(integer_facet(dy, -dx, dy * p.x - dx * p.y));
      out.push_back(integer_facet(-dy, dx, dx * p.y - dy * p.x));
      // endpoint bounds along the direction p -> q
      out.push_back(integer_facet(dx, dy, dx * q.x + dy * q.y));
      out.push_back(integer_facet(-dx, -dy, -(dx * p.x + dy * p.y)));
      break;
    }
    case HullShape::polygon: {
      // Interior is on the left of each counterclockwise edge p -> q.
      for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& p = v[i];
        const Point2& q = v[(i + 1) % v.size()];
        Rational dx = q.x - p.x, dy = q.y - p.y;
        out.push_back(integer_facet(dy, -dx, dy * p.x - dx * p.y));
      }
      break;
    }
  }
  return out;
}

bool satisfies(const Facet& f, const Point2& p) { return lhs(f, p) <= Rational(f.c); }
bool on_facet(const Facet& f, const Point2& p) { return lhs(f, p) == Rational(f.c); }

std::vector<PolytopePoint> incident_points(const Hull& h, const Facet& f,
                                           std::span<const PolytopePoint> points) {
  auto all = facets(h);
  if (std::find(all.begin(), all.end(), f) == all.end())
    throw DomainError("facet (" + f.a.str() + ", " + f.b.str() + ", " + f.c.str() +
                      ") does not belong to the hull");
  std::vector<PolytopePoint> out;
  for (const auto& p : points)
    if (on_facet(f, p.point)) out.push_back(p);
  return out;
}

}  // namespace pf

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace prodstruct {

using Rational = boost::multiprecision::mpq_rational;

struct Point {
  Rational x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

/// Parses "p/q", "p" or a decimal-free integer. Throws MalformedInput.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);

/// Sign of the cross product (b-a)×(c-a).
int orient(const Point& a, const Point& b, const Point& c);

enum class SegHit {
  none,             ///< disjoint
  shared_endpoint,  ///< meet only at a common endpoint
  proper,           ///< interiors cross transversally at one point
  degenerate        ///< touching or collinear overlap
};

/// Classifies how closed segments ab and cd meet. For proper crossings the
/// parameters along ab and cd and the crossing point are returned.
SegHit intersect_segments(const Point& a, const Point& b, const Point& c, const Point& d,
                          Rational* t_ab = nullptr, Rational* t_cd = nullptr,
                          Point* at = nullptr);

/// Strict point-in-open-segment test.
bool on_open_segment(const Point& p, const Point& a, const Point& b);

/// Counter-clockwise angular comparison of direction vectors (starting at
/// the positive x axis). Both vectors must be non-zero.
bool angle_less(const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy);

Rational squared_distance(const Point& a, const Point& b);

}  // namespace prodstruct

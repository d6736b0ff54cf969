#include "prodstruct/geometry.h"

#include <cctype>

#include "prodstruct/errors.h"

namespace prodstruct {

namespace {

bool is_int_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

int sgn(const Rational& r) { return r.sign(); }

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den)) throw MalformedInput("bad rational: '" + raw + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  boost::multiprecision::mpz_int p(num), q(den);
  if (q == 0) throw MalformedInput("zero denominator: '" + raw + "'");
  return Rational(p, q);
}

std::string to_string(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return boost::multiprecision::numerator(r).str();
  return r.str();
}

int orient(const Point& a, const Point& b, const Point& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(v);
}

bool on_open_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  if (p == a || p == b) return false;
  bool in_x = (a.x <= p.x && p.x <= b.x) || (b.x <= p.x && p.x <= a.x);
  bool in_y = (a.y <= p.y && p.y <= b.y) || (b.y <= p.y && p.y <= a.y);
  return in_x && in_y;
}

SegHit intersect_segments(const Point& a, const Point& b, const Point& c, const Point& d,
                          Rational* t_ab, Rational* t_cd, Point* at) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  bool shares = a == c || a == d || b == c || b == d;
  if (o1 == 0 && o2 == 0) {  // collinear
    auto in_box = [](const Point& p, const Point& s, const Point& e) {
      bool ix = (s.x <= p.x && p.x <= e.x) || (e.x <= p.x && p.x <= s.x);
      bool iy = (s.y <= p.y && p.y <= e.y) || (e.y <= p.y && p.y <= s.y);
      return ix && iy;
    };
    bool touch = in_box(c, a, b) || in_box(d, a, b) || in_box(a, c, d) || in_box(b, c, d);
    if (!touch) return SegHit::none;
    if (on_open_segment(c, a, b) || on_open_segment(d, a, b) || on_open_segment(a, c, d) ||
        on_open_segment(b, c, d))
      return SegHit::degenerate;
    if ((a == c && b == d) || (a == d && b == c)) return SegHit::degenerate;
    return SegHit::shared_endpoint;
  }
  if (shares) {
    // a shared endpoint plus a non-collinear configuration: they meet only there
    return SegHit::shared_endpoint;
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return SegHit::none;
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return SegHit::degenerate;
  Rational dx1 = b.x - a.x, dy1 = b.y - a.y, dx2 = d.x - c.x, dy2 = d.y - c.y;
  Rational den = dx1 * dy2 - dy1 * dx2;
  Rational t = ((c.x - a.x) * dy2 - (c.y - a.y) * dx2) / den;
  Rational u = ((c.x - a.x) * dy1 - (c.y - a.y) * dx1) / den;
  if (t_ab) *t_ab = t;
  if (t_cd) *t_cd = u;
  if (at) *at = Point{a.x + t * dx1, a.y + t * dy1};
  return SegHit::proper;
}

bool angle_less(const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) {
  // half 0: angle in [0, pi), half 1: [pi, 2pi)
  auto half = [](const Rational& x, const Rational& y) {
    return (y.sign() > 0 || (y.sign() == 0 && x.sign() > 0)) ? 0 : 1;
  };
  int hu = half(ux, uy), hv = half(vx, vy);
  if (hu != hv) return hu < hv;
  Rational cross = ux * vy - uy * vx;
  return cross.sign() > 0;
}

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace prodstruct

#include "prodstruct/generators.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "prodstruct/errors.h"

namespace prodstruct {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x;
  do x = eng_();
  while (x < threshold);
  return x % n;
}

int Rng::uniform(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

bool Rng::coin(double p) { return static_cast<double>(eng_() >> 11) * 0x1.0p-53 < p; }

namespace {

int dart_between(const PlaneGraph& g, int u, int v) {
  for (int d : g.rotation(u))
    if (g.head(d) == v) return d;
  return -1;
}

}  // namespace

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
  if (n < 3) throw GenerationError("a triangulation needs at least 3 vertices");
  Rng rng(seed);
  using Tri = std::array<int, 3>;
  std::vector<Tri> tris{{0, 1, 2}};
  std::map<std::pair<int, int>, int> owner;  // directed edge -> inner triangle
  std::set<Edge> adj{{0, 1}, {1, 2}, {0, 2}};
  auto own = [&](int t) {
    for (int i = 0; i < 3; ++i) owner[{tris[t][i], tris[t][(i + 1) % 3]}] = t;
  };
  own(0);
  for (int v = 3; v < n; ++v) {
    int t = static_cast<int>(rng.below(tris.size()));
    auto [a, b, c] = tris[t];
    tris[t] = {a, b, v};
    tris.push_back({b, c, v});
    tris.push_back({c, a, v});
    own(t);
    own(static_cast<int>(tris.size()) - 2);
    own(static_cast<int>(tris.size()) - 1);
    adj.insert({a, v});
    adj.insert({b, v});
    adj.insert({c, v});
  }
  // random legal flips mix the degree sequence
  for (int it = 0; it < 2 * n; ++it) {
    int t = static_cast<int>(rng.below(tris.size()));
    int i = static_cast<int>(rng.below(3));
    int a = tris[t][i], b = tris[t][(i + 1) % 3], c = tris[t][(i + 2) % 3];
    auto it_o = owner.find({b, a});
    if (it_o == owner.end()) continue;
    int o = it_o->second;
    int d = -1;
    for (int x : tris[o])
      if (x != a && x != b) d = x;
    if (d == c || adj.count(std::minmax(c, d))) continue;
    owner.erase({a, b});
    owner.erase({b, a});
    adj.erase(std::minmax(a, b));
    adj.insert(std::minmax(c, d));
    tris[t] = {c, a, d};
    tris[o] = {d, b, c};
    own(t);
    own(o);
  }
  std::vector<std::vector<int>> faces;
  for (auto& t : tris) faces.push_back({t[0], t[1], t[2]});
  faces.push_back({0, 2, 1});
  PlaneGraph g = PlaneGraph::from_faces(n, faces);
  g.set_outer_dart(dart_between(g, 0, 2));
  return g;
}

PlaneGraph random_one_plane(int rows, int cols, double p_cross, std::uint64_t seed) {
  if (rows < 2 || cols < 2) throw GenerationError("grid needs at least 2 rows and 2 columns");
  Rng rng(seed);
  auto id = [&](int r, int c) { return r * cols + c; };
  int n = rows * cols;
  std::vector<std::vector<int>> faces;
  std::vector<int> dummies;
  for (int r = 0; r + 1 < rows; ++r)
    for (int c = 0; c + 1 < cols; ++c) {
      int a = id(r, c), b = id(r, c + 1), cc = id(r + 1, c + 1), d = id(r + 1, c);
      if (rng.coin(p_cross)) {
        int x = n++;
        dummies.push_back(x);
        faces.push_back({a, b, x});
        faces.push_back({b, cc, x});
        faces.push_back({cc, d, x});
        faces.push_back({d, a, x});
      } else {
        faces.push_back({a, b, cc, d});
      }
    }
  std::vector<int> outer;
  for (int r = 0; r < rows; ++r) outer.push_back(id(r, 0));
  for (int c = 1; c < cols; ++c) outer.push_back(id(rows - 1, c));
  for (int r = rows - 2; r >= 0; --r) outer.push_back(id(r, cols - 1));
  for (int c = cols - 2; c >= 1; --c) outer.push_back(id(0, c));
  faces.push_back(outer);
  PlaneGraph g = PlaneGraph::from_faces(n, faces);
  for (int x : dummies) g.set_crossing(x, true);
  g.set_outer_dart(dart_between(g, id(0, 0), id(1, 0)));
  return g;
}

namespace {

using P64 = std::array<long long, 2>;

int orient64(const P64& a, const P64& b, const P64& c) {
  long long v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return (v > 0) - (v < 0);
}

bool on_closed_segment(const P64& p, const P64& a, const P64& b) {
  if (orient64(a, b, p) != 0) return false;
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

// exact crossing point of proper crossing ab x cd as reduced (xn, yn, den)
std::tuple<long long, long long, long long> crossing_point(const P64& a, const P64& b,
                                                           const P64& c, const P64& d) {
  long long rx = b[0] - a[0], ry = b[1] - a[1], sx = d[0] - c[0], sy = d[1] - c[1];
  long long den = rx * sy - ry * sx;
  long long tn = (c[0] - a[0]) * sy - (c[1] - a[1]) * sx;
  long long xn = a[0] * den + tn * rx, yn = a[1] * den + tn * ry;
  if (den < 0) {
    den = -den;
    xn = -xn;
    yn = -yn;
  }
  long long g = std::gcd(std::gcd(xn < 0 ? -xn : xn, yn < 0 ? -yn : yn), den);
  return {xn / g, yn / g, den / g};
}

std::vector<P64> random_p64(int n, Rng& rng, int range) {
  std::set<P64> seen;
  std::vector<P64> pts;
  while (static_cast<int>(pts.size()) < n) {
    P64 p{static_cast<long long>(rng.below(range)), static_cast<long long>(rng.below(range))};
    if (seen.insert(p).second) pts.push_back(p);
  }
  return pts;
}

}  // namespace

std::vector<Point> random_points(int n, std::uint64_t seed, int range) {
  Rng rng(seed);
  std::vector<Point> out;
  for (auto& p : random_p64(n, rng, range)) out.push_back({Rational(p[0]), Rational(p[1])});
  return out;
}

Drawing random_kplane_drawing(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0) throw GenerationError("bad k-plane parameters");
  Rng rng(seed);
  auto pts = random_p64(n, rng, 10000);
  std::vector<std::vector<int>> near(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::pair<long long, int>> ds;
    for (int w = 0; w < n; ++w)
      if (w != v) {
        long long dx = pts[v][0] - pts[w][0], dy = pts[v][1] - pts[w][1];
        ds.push_back({dx * dx + dy * dy, w});
      }
    std::sort(ds.begin(), ds.end());
    for (std::size_t i = 0; i < ds.size() && i < 8; ++i) near[v].push_back(ds[i].second);
  }
  std::vector<Edge> edges;
  std::set<Edge> have;
  std::vector<int> cross;
  std::set<std::tuple<long long, long long, long long>> points_used;
  for (int it = 0; it < 8 * n && n > 1; ++it) {
    int v = static_cast<int>(rng.below(n));
    int w = rng.coin(0.8) ? near[v][rng.below(near[v].size())] : static_cast<int>(rng.below(n));
    if (v == w || have.count(std::minmax(v, w))) continue;
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      if (x != v && x != w && on_closed_segment(pts[x], pts[v], pts[w])) ok = false;
    std::vector<int> hit;
    std::vector<std::tuple<long long, long long, long long>> at;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      auto [p, q] = edges[e];
      if (p == v || p == w || q == v || q == w) continue;
      int o1 = orient64(pts[v], pts[w], pts[p]), o2 = orient64(pts[v], pts[w], pts[q]);
      int o3 = orient64(pts[p], pts[q], pts[v]), o4 = orient64(pts[p], pts[q], pts[w]);
      if (o1 * o2 < 0 && o3 * o4 < 0) {
        if (cross[e] + 1 > k) ok = false;
        hit.push_back(static_cast<int>(e));
        at.push_back(crossing_point(pts[v], pts[w], pts[p], pts[q]));
      }
    }
    if (!ok || static_cast<int>(hit.size()) > k) continue;
    std::set<std::tuple<long long, long long, long long>> mine(at.begin(), at.end());
    if (mine.size() != at.size()) continue;
    for (auto& c : at)
      if (points_used.count(c)) ok = false;
    if (!ok) continue;
    for (int e : hit) ++cross[e];
    points_used.insert(at.begin(), at.end());
    edges.emplace_back(v, w);
    have.insert(std::minmax(v, w));
    cross.push_back(static_cast<int>(hit.size()));
  }
  Drawing d;
  for (auto& p : pts) d.points.push_back({Rational(p[0]), Rational(p[1])});
  d.edges = edges;
  return d;
}

MapInstance random_map(int n, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  PlaneGraph g = random_triangulation(std::max(n, 4), seed);
  int outer = g.outer_face();
  for (int it = 0; it < g.n() / 2; ++it) {
    FaceSet fs = g.faces();
    std::vector<int> live;
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.edge_alive(e)) live.push_back(e);
    int e = live[rng.below(live.size())];
    int f1 = fs.face_of_dart[2 * e], f2 = fs.face_of_dart[2 * e + 1];
    if (f1 == f2 || f1 == outer || f2 == outer) continue;
    auto [u, v] = std::pair(g.ends(e)[0], g.ends(e)[1]);
    if (g.degree(u) < 4 || g.degree(v) < 4) continue;
    std::set<int> a, b;
    for (int d : fs.darts[f1]) a.insert(g.tail(d));
    for (int d : fs.darts[f2]) b.insert(g.tail(d));
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.size() != 2) continue;  // merged face must stay a simple cycle
    g.remove_edge(e);
    outer = g.outer_face();
  }
  MapInstance m;
  m.g0 = g.compacted();
  FaceSet fs = m.g0.faces();
  int maxdeg = 0;
  for (int v = 0; v < m.g0.n(); ++v) maxdeg = std::max(maxdeg, m.g0.degree(v));
  for (int f = 0; f < fs.size(); ++f) {
    bool low = true;
    for (int d : fs.darts[f]) low = low && m.g0.degree(m.g0.tail(d)) < maxdeg;
    m.face_kind.push_back(low && rng.coin(0.3) ? FaceKind::lake : FaceKind::nation);
  }
  m.declared_d = maxdeg;
  return m;
}

std::vector<Polyline> random_curves(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Polyline> curves;
  for (int c = 0; c < count; ++c) {
    bool placed = false;
    for (int attempt = 0; attempt < 100 && !placed; ++attempt) {
      int len = rng.uniform(2, 4);
      Polyline pl;
      for (int i = 0; i < len; ++i) {
        Point p{Rational(rng.uniform(0, 200)), Rational(rng.uniform(0, 200))};
        if (!pl.empty() && pl.back() == p) continue;
        pl.push_back(p);
      }
      if (pl.size() < 2) continue;
      curves.push_back(pl);
      try {
        string_shortcuts(curves);
        placed = true;
      } catch (const Error&) {
        curves.pop_back();
      }
    }
    if (!placed) throw GenerationError("could not place curve in general position");
  }
  return curves;
}

Graph random_graph(int n, double avg_deg, std::uint64_t seed) {
  Rng rng(seed);
  double p = n > 1 ? avg_deg / (n - 1) : 0.0;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.coin(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

ShortcutSystem random_shortcuts(const Graph& g, int k, int d, int count, std::uint64_t seed) {
  Rng rng(seed);
  ShortcutSystem s;
  s.base = g;
  s.declared_k = k;
  s.declared_d = d;
  if (g.m() == 0) return s;
  std::vector<int> load(g.n(), 0);
  for (int it = 0; it < count; ++it) {
    int v = static_cast<int>(rng.below(g.n()));
    if (g.degree(v) == 0) continue;
    int len = rng.uniform(1, std::max(1, k));
    std::vector<int> path{v};
    std::set<int> on{v};
    while (static_cast<int>(path.size()) <= len) {
      std::vector<int> opts;
      for (int w : g.neighbours(path.back()))
        if (!on.count(w)) opts.push_back(w);
      if (opts.empty()) break;
      int w = opts[rng.below(opts.size())];
      path.push_back(w);
      on.insert(w);
    }
    if (path.size() < 2) continue;
    bool ok = true;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) ok = ok && load[path[i]] < d;
    if (!ok) continue;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++load[path[i]];
    s.paths.push_back(path);
  }
  return s;
}

}  // namespace prodstruct

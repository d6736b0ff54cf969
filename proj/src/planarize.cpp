#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/planar.h"

namespace prodstruct {

namespace {

struct Box {
  double x0, y0, x1, y1;
};

Box box_of(const Point& a, const Point& b) {
  double ax = a.x.convert_to<double>(), ay = a.y.convert_to<double>();
  double bx = b.x.convert_to<double>(), by = b.y.convert_to<double>();
  auto pad = [](double v) { return std::abs(v) * 1e-9 + 1e-12; };
  Box r{std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by)};
  r.x0 -= pad(r.x0);
  r.y0 -= pad(r.y0);
  r.x1 += pad(r.x1);
  r.y1 += pad(r.y1);
  return r;
}

bool boxes_meet(const Box& a, const Box& b) {
  return a.x0 <= b.x1 && b.x0 <= a.x1 && a.y0 <= b.y1 && b.y0 <= a.y1;
}

struct Crossing {
  int e1, e2;
  Rational t1, t2;
  Point at;
};

/// Dart with outer face on its left at the lexicographically smallest
/// non-isolated vertex.
int find_outer_dart(const PlaneGraph& g, const std::vector<Point>& pos) {
  int best = -1;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 0 && (best < 0 || pos[v] < pos[best])) best = v;
  if (best < 0) return -1;
  const auto& rot = g.rotation(best);
  int pick = rot.back();
  for (int d : rot) {
    Rational dx = pos[g.head(d)].x - pos[best].x, dy = pos[g.head(d)].y - pos[best].y;
    bool upper = dy.sign() > 0 || (dy.sign() == 0 && dx.sign() > 0);
    if (upper) pick = d;
  }
  return pick;
}

}  // namespace

PlaneGraph plane_graph_from_positions(int n, const std::vector<Edge>& edges,
                                      const std::vector<Point>& pos) {
  std::vector<std::vector<int>> rot(n);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    rot[edges[e].first].push_back(2 * e);
    rot[edges[e].second].push_back(2 * e + 1);
  }
  auto head_of = [&](int d) { return (d & 1) ? edges[d >> 1].first : edges[d >> 1].second; };
  for (int v = 0; v < n; ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
      const Point& pa = pos[head_of(a)];
      const Point& pb = pos[head_of(b)];
      return angle_less(pa.x - pos[v].x, pa.y - pos[v].y, pb.x - pos[v].x, pb.y - pos[v].y);
    });
  }
  PlaneGraph g = PlaneGraph::from_rotation(n, edges, rot);
  g.set_outer_dart(find_outer_dart(g, pos));
  return g;
}

Planarization planarize(const Drawing& d) {
  const int n = static_cast<int>(d.points.size());
  {
    std::set<Point> seen;
    for (const auto& p : d.points)
      if (!seen.insert(p).second) throw GeometryError("two vertices share a position");
  }
  Graph simple(n, d.edges);  // validates endpoints, merges duplicates
  const auto& edges = simple.edges();
  const int m = static_cast<int>(edges.size());

  std::vector<Box> boxes(m);
  for (int e = 0; e < m; ++e) boxes[e] = box_of(d.points[edges[e].first], d.points[edges[e].second]);

  // vertices in the interior of segments
  for (int e = 0; e < m; ++e) {
    const Point& a = d.points[edges[e].first];
    const Point& b = d.points[edges[e].second];
    for (int v = 0; v < n; ++v) {
      if (v == edges[e].first || v == edges[e].second) continue;
      const Point& p = d.points[v];
      double px = p.x.convert_to<double>(), py = p.y.convert_to<double>();
      if (px < boxes[e].x0 || px > boxes[e].x1 || py < boxes[e].y0 || py > boxes[e].y1) continue;
      if (on_open_segment(p, a, b))
        throw GeometryError("vertex " + std::to_string(v) + " lies in the interior of an edge");
    }
  }

  std::vector<Crossing> crossings;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (!boxes_meet(boxes[i], boxes[j])) continue;
      Crossing c{i, j, 0, 0, {}};
      SegHit h = intersect_segments(d.points[edges[i].first], d.points[edges[i].second],
                                    d.points[edges[j].first], d.points[edges[j].second], &c.t1,
                                    &c.t2, &c.at);
      if (h == SegHit::degenerate) throw GeometryError("overlapping or touching segments");
      if (h == SegHit::proper) crossings.push_back(std::move(c));
    }
  {
    std::set<Point> seen;
    for (const auto& c : crossings)
      if (!seen.insert(c.at).second) throw GeometryError("three or more segments share a crossing point");
  }

  const int nc = static_cast<int>(crossings.size());
  std::vector<Point> pos = d.points;
  std::vector<std::vector<std::pair<Rational, int>>> along(m);
  for (int c = 0; c < nc; ++c) {
    pos.push_back(crossings[c].at);
    along[crossings[c].e1].emplace_back(crossings[c].t1, n + c);
    along[crossings[c].e2].emplace_back(crossings[c].t2, n + c);
  }

  Planarization out;
  std::vector<Edge> sub;
  std::vector<std::vector<int>> paths;
  out.crossings_on_edge.assign(m, 0);
  for (int e = 0; e < m; ++e) {
    auto& a = along[e];
    std::sort(a.begin(), a.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<int> path{edges[e].first};
    for (const auto& [t, v] : a) path.push_back(v);
    path.push_back(edges[e].second);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) sub.emplace_back(path[i], path[i + 1]);
    out.crossings_on_edge[e] = static_cast<int>(a.size());
    out.max_crossings_per_edge = std::max(out.max_crossings_per_edge, out.crossings_on_edge[e]);
    paths.push_back(std::move(path));
  }

  out.g0 = plane_graph_from_positions(n + nc, sub, pos);
  for (int c = 0; c < nc; ++c) {
    out.g0.set_crossing(n + c, true);
    out.g0.labels[n + c] = "dummy";
  }
  out.shortcuts.base = out.g0.simple_graph();
  out.shortcuts.paths = std::move(paths);
  out.shortcuts.declared_k = out.max_crossings_per_edge + 1;
  out.shortcuts.declared_d = 2;
  for (int v = 0; v < n; ++v) out.original_vertices.push_back(v);
  return out;
}

}  // namespace prodstruct

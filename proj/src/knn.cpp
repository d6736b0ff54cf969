#include <algorithm>
#include <numeric>

#include "prodstruct/errors.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

GeometricGraph knn_build(const std::vector<Point>& points, int k) {
  const int n = static_cast<int>(points.size());
  if (k < 1) throw MalformedInput("knn_build needs k >= 1");
  if (n <= k) throw SizeLimit("knn_build needs more than k points");
  {
    std::vector<Point> s = points;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw MalformedInput("knn_build needs distinct points");
  }
  std::vector<Edge> edges;
  std::vector<int> order(n);
  std::vector<Rational> d2(n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) d2[w] = squared_distance(points[v], points[w]);
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    order.erase(order.begin() + v);
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](int a, int b) {
      if (d2[a] != d2[b]) return d2[a] < d2[b];
      return points[a] < points[b];
    });
    for (int i = 0; i < k; ++i) edges.emplace_back(v, order[i]);
  }
  return {points, Graph(n, edges)};
}

namespace {

struct Box {
  double x0, x1, y0, y1;
};

Box box_of(const Point& a, const Point& b) {
  double ax = a.x.convert_to<double>(), ay = a.y.convert_to<double>();
  double bx = b.x.convert_to<double>(), by = b.y.convert_to<double>();
  const double eps = 1e-9 * (1 + std::max({std::abs(ax), std::abs(ay), std::abs(bx), std::abs(by)}));
  return {std::min(ax, bx) - eps, std::max(ax, bx) + eps, std::min(ay, by) - eps,
          std::max(ay, by) + eps};
}

bool boxes_meet(const Box& p, const Box& q) {
  return p.x0 <= q.x1 && q.x0 <= p.x1 && p.y0 <= q.y1 && q.y0 <= p.y1;
}

}  // namespace

std::vector<int> count_crossings(const std::vector<Point>& pts, const std::vector<Edge>& edges,
                                 Exec exec) {
  const int m = static_cast<int>(edges.size());
  std::vector<Box> boxes(m);
  for (int i = 0; i < m; ++i) boxes[i] = box_of(pts[edges[i].first], pts[edges[i].second]);
  auto crosses = [&](int i, int j) {
    const auto& [a, b] = edges[i];
    const auto& [c, d] = edges[j];
    if (a == c || a == d || b == c || b == d) return false;
    if (!boxes_meet(boxes[i], boxes[j])) return false;
    return intersect_segments(pts[a], pts[b], pts[c], pts[d]) == SegHit::proper;
  };
  std::vector<int> cnt(m, 0);
  if (exec == Exec::parallel) {
    // each edge counts its own row; no shared writes
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < m; ++i) {
      int c = 0;
      for (int j = 0; j < m; ++j)
        if (j != i && crosses(i, j)) ++c;
      cnt[i] = c;
    }
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (crosses(i, j)) {
          ++cnt[i];
          ++cnt[j];
        }
  }
  return cnt;
}

KnnStats knn_crossing_stats(const GeometricGraph& gg, int k, Exec exec) {
  KnnStats s;
  s.crossings_per_edge = count_crossings(gg.points, gg.g.edges(), exec);
  for (int c : s.crossings_per_edge) {
    s.max_crossings = std::max(s.max_crossings, c);
    s.total_crossings += c;
  }
  s.total_crossings /= 2;
  s.max_degree = gg.g.max_degree();
  s.bound_ok = s.max_crossings <= 78 * k * k - 6 * k && s.max_degree <= 6 * k;
  return s;
}

}  // namespace prodstruct

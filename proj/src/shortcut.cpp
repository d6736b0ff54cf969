#include <algorithm>
#include <climits>
#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

ShortcutValidation validate_shortcuts(const ShortcutSystem& s) {
  const Graph& g = s.base;
  ShortcutValidation r;
  r.internal_load.assign(g.n(), 0);
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& p = s.paths[i];
    int len = static_cast<int>(p.size()) - 1;
    bool ok = len >= 1;
    for (int v : p)
      if (v < 0 || v >= g.n()) ok = false;
    if (ok) {
      std::vector<int> sorted = p;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) ok = false;
      for (int j = 0; ok && j < len; ++j)
        if (!g.adjacent(p[j], p[j + 1])) ok = false;
    }
    if (!ok) {
      r.violations.push_back(static_cast<int>(i));
      continue;
    }
    r.k_actual = std::max(r.k_actual, len);
    for (int j = 1; j < len; ++j) r.d_actual = std::max(r.d_actual, ++r.internal_load[p[j]]);
  }
  r.within_declared = r.violations.empty() && r.k_actual <= s.declared_k && r.d_actual <= s.declared_d;
  return r;
}

Graph apply_shortcuts(const ShortcutSystem& s) {
  std::vector<Edge> edges = s.base.edges();
  for (const auto& p : s.paths)
    if (p.size() >= 2 && p.front() != p.back()) edges.emplace_back(p.front(), p.back());
  Graph out(s.base.n(), edges);
  out.labels = s.base.labels;
  return out;
}

ShortcutSystem with_edge_shortcuts(const ShortcutSystem& s) {
  ShortcutSystem r = s;
  std::set<Edge> have;
  for (const auto& p : s.paths)
    if (p.size() == 2) have.insert(std::minmax(p[0], p[1]));
  for (const auto& [u, v] : s.base.edges())
    if (!have.count({u, v})) r.paths.push_back({u, v});
  r.declared_k = std::max(r.declared_k, 1);
  return r;
}

namespace {

// shortest paths from x to every y > x within distance k
std::vector<std::vector<int>> power_paths_from(const Graph& g, int x, int k) {
  const int n = g.n();
  std::vector<int> dist(n, -1), order;
  dist[x] = 0;
  order.push_back(x);
  for (std::size_t h = 0; h < order.size(); ++h) {
    int u = order[h];
    if (dist[u] == k) continue;
    for (int w : g.neighbours(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
  }
  std::vector<int> parent(n, -1);
  for (int v : order)
    if (v != x)
      for (int u : g.neighbours(v))
        if (dist[u] == dist[v] - 1) {
          parent[v] = u;
          break;
        }
  std::vector<std::vector<int>> out;
  for (int y = x + 1; y < n; ++y) {
    if (dist[y] < 1) continue;
    std::vector<int> p;
    for (int v = y; v != -1; v = parent[v]) p.push_back(v);
    std::reverse(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

ShortcutSystem power_shortcuts(const Graph& g, int k, Exec exec) {
  if (k < 1) throw MalformedInput("power_shortcuts needs k >= 1");
  const int n = g.n();
  std::vector<std::vector<std::vector<int>>> per(n);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (int x = 0; x < n; ++x) per[x] = power_paths_from(g, x, k);
  } else {
    for (int x = 0; x < n; ++x) per[x] = power_paths_from(g, x, k);
  }
  ShortcutSystem s;
  s.base = g;
  for (auto& v : per)
    for (auto& p : v) s.paths.push_back(std::move(p));
  s.declared_k = k;
  long long d = 2LL * k, delta = g.max_degree();
  for (int i = 0; i < k && d <= INT_MAX; ++i) d *= delta;
  s.declared_d = static_cast<int>(std::min<long long>(d, INT_MAX));
  return s;
}

Graph graph_power(const Graph& g, int k) {
  std::vector<Edge> edges;
  for (int x = 0; x < g.n(); ++x) {
    auto dist = bfs_distances(g, x);
    for (int y = x + 1; y < g.n(); ++y)
      if (dist[y] >= 1 && dist[y] <= k) edges.emplace_back(x, y);
  }
  return Graph(g.n(), edges);
}

}  // namespace prodstruct

#include "prodstruct/treewidth.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

#include "prodstruct/errors.h"

namespace prodstruct {

namespace {

using Mask = std::uint32_t;

/// Vertices outside s ∪ {v} reachable from v through s.
inline int q_size(const std::vector<Mask>& nb, Mask s, int v) {
  Mask comp = Mask{1} << v;
  Mask frontier = comp;
  Mask reach = 0;
  while (frontier) {
    Mask nxt = 0;
    for (Mask f = frontier; f; f &= f - 1) nxt |= nb[std::countr_zero(f)];
    reach |= nxt;
    Mask grow = nxt & s & ~comp;
    comp |= grow;
    frontier = grow;
  }
  return std::popcount(reach & ~comp & ~(Mask{1} << v));
}

inline void relax(const std::vector<Mask>& nb, const std::vector<std::int8_t>& dp, Mask s,
                  std::int8_t& best, std::int8_t& arg) {
  best = 127;
  arg = -1;
  for (Mask t = s; t; t &= t - 1) {
    int v = std::countr_zero(t);
    Mask rest = s & ~(Mask{1} << v);
    int prev = dp[rest];
    if (prev >= best) continue;
    int val = std::max(prev, q_size(nb, rest, v));
    if (val < best) {
      best = static_cast<std::int8_t>(val);
      arg = static_cast<std::int8_t>(v);
    }
  }
}

/// Optimal elimination order of a connected component given as local graph.
std::vector<int> exact_order(const Graph& g, Exec exec) {
  const int n = g.n();
  std::vector<Mask> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  const Mask full = n == 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
  std::vector<std::int8_t> dp(std::size_t{full} + 1, 0), choice(std::size_t{full} + 1, -1);
  dp[0] = -1;
  if (exec == Exec::serial) {
    // numeric order visits every proper subset before its superset
    for (Mask s = 1; s != 0 && s <= full; ++s) {
      relax(nb, dp, s, dp[s], choice[s]);
      if (s == full) break;
    }
  } else {
    for (int level = 1; level <= n; ++level) {
      const std::int64_t total = std::int64_t{full} + 1;
#pragma omp parallel for schedule(static, 4096)
      for (std::int64_t i = 1; i < total; ++i) {
        Mask s = static_cast<Mask>(i);
        if (std::popcount(s) != level) continue;
        relax(nb, dp, s, dp[s], choice[s]);
      }
    }
  }
  std::vector<int> rev;
  for (Mask s = full; s;) {
    int v = choice[s];
    rev.push_back(v);
    s &= ~(Mask{1} << v);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  TreeDecomposition td;
  if (n == 0) return td;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  td.bags.assign(n, {});
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> higher(adj[v].begin(), adj[v].end());
    td.bags[v].push_back(v);
    int par = -1;
    for (int w : higher) {
      td.bags[v].push_back(w);
      if (par == -1 || pos[w] < pos[par]) par = w;
    }
    std::sort(td.bags[v].begin(), td.bags[v].end());
    parent[v] = par;
    for (std::size_t a = 0; a < higher.size(); ++a) {
      adj[higher[a]].erase(v);
      for (std::size_t b = a + 1; b < higher.size(); ++b) {
        adj[higher[a]].insert(higher[b]);
        adj[higher[b]].insert(higher[a]);
      }
    }
  }
  int prev_root = -1;
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (parent[v] >= 0) {
      td.tree_edges.emplace_back(parent[v], v);
    } else {
      if (prev_root >= 0) td.tree_edges.emplace_back(prev_root, v);
      else td.root = v;
      prev_root = v;
    }
  }
  return td;
}

std::vector<int> min_fill_order(const Graph& g) {
  const int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  std::vector<char> done(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    long best_fill = -1;
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      long fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (best == -1 || fill < best_fill) {
        best_fill = fill;
        best = v;
        if (fill == 0) break;
      }
    }
    std::vector<int> nbrs(adj[best].begin(), adj[best].end());
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      adj[nbrs[a]].erase(best);
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        adj[nbrs[a]].insert(nbrs[b]);
        adj[nbrs[b]].insert(nbrs[a]);
      }
    }
    adj[best].clear();
    done[best] = 1;
    order.push_back(best);
  }
  return order;
}

int degeneracy(const Graph& g) {
  const int n = g.n();
  std::vector<int> deg(n);
  std::set<std::pair<int, int>> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    q.insert({deg[v], v});
  }
  std::vector<char> gone(n, 0);
  int best = 0;
  while (!q.empty()) {
    auto [d, v] = *q.begin();
    q.erase(q.begin());
    best = std::max(best, d);
    gone[v] = 1;
    for (int w : g.neighbours(v))
      if (!gone[w]) {
        q.erase({deg[w], w});
        q.insert({--deg[w], w});
      }
  }
  return best;
}

TreewidthResult treewidth_heuristic(const Graph& g) {
  TreewidthResult r;
  r.td = decomposition_from_order(g, min_fill_order(g));
  r.width = g.n() == 0 ? -1 : r.td.width();
  r.lower_bound = g.n() == 0 ? -1 : degeneracy(g);
  r.exact = false;
  return r;
}

TreewidthResult treewidth_exact(const Graph& g, int cap, Exec exec) {
  if (g.n() > cap)
    throw SizeLimit("exact treewidth limited to " + std::to_string(cap) +
                    " vertices; use heuristic mode");
  if (cap > 30) throw SizeLimit("exact treewidth cap cannot exceed 30");
  std::vector<int> order;
  for (const auto& comp : connected_components(g)) {
    Graph local = induced_subgraph(g, comp);
    for (int v : exact_order(local, exec)) order.push_back(comp[v]);
  }
  TreewidthResult r;
  r.td = decomposition_from_order(g, order);
  r.width = g.n() == 0 ? -1 : r.td.width();
  r.lower_bound = r.width;
  r.exact = true;
  return r;
}

TreewidthResult treewidth(const Graph& g, TwMode mode, int cap) {
  return mode == TwMode::exact ? treewidth_exact(g, cap) : treewidth_heuristic(g);
}

}  // namespace prodstruct

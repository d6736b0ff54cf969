#include "prodstruct/graph.h"

#include <algorithm>
#include <deque>
#include <set>

#include "prodstruct/errors.h"

namespace prodstruct {

Graph::Graph(int n) : n_(n), adj_(n) {
  if (n < 0) throw MalformedInput("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw MalformedInput("edge endpoint out of range: " + std::to_string(u) + "-" +
                           std::to_string(v));
    if (u == v) throw MalformedInput("self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  int w = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), w);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.edges() == b.edges();
}

// ---------------------------------------------------------------------------
// Layering / partition

Layering Layering::from_layer_of(const std::vector<int>& layer_of) {
  Layering l;
  l.layer_of = layer_of;
  int top = -1;
  for (int x : layer_of) {
    if (x < 0) throw MalformedInput("negative layer index");
    top = std::max(top, x);
  }
  l.layers.assign(top + 1, {});
  for (int v = 0; v < static_cast<int>(layer_of.size()); ++v) l.layers[layer_of[v]].push_back(v);
  return l;
}

Layering Layering::from_layers(int n, const std::vector<std::vector<int>>& layers) {
  std::vector<int> lo(n, -1);
  for (int i = 0; i < static_cast<int>(layers.size()); ++i)
    for (int v : layers[i]) {
      if (v < 0 || v >= n) throw MalformedInput("layer vertex out of range");
      if (lo[v] != -1) throw MalformedInput("vertex " + std::to_string(v) + " in two layers");
      lo[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (lo[v] == -1) throw MalformedInput("vertex " + std::to_string(v) + " missing from layering");
  Layering l;
  l.layer_of = lo;
  l.layers = layers;
  for (auto& layer : l.layers) std::sort(layer.begin(), layer.end());
  return l;
}

HPartition HPartition::from_part_of(const std::vector<int>& part_of, int num_parts) {
  HPartition p;
  p.part_of = part_of;
  int top = num_parts - 1;
  for (int x : part_of) {
    if (x < 0) throw MalformedInput("vertex without part");
    top = std::max(top, x);
  }
  p.parts.assign(top + 1, {});
  for (int v = 0; v < static_cast<int>(part_of.size()); ++v) p.parts[part_of[v]].push_back(v);
  return p;
}

HPartition HPartition::from_parts(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<int> po(n, -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (int v : parts[i]) {
      if (v < 0 || v >= n) throw MalformedInput("part vertex out of range");
      if (po[v] != -1) throw MalformedInput("overlapping parts at vertex " + std::to_string(v));
      po[v] = i;
    }
  for (int v = 0; v < n; ++v)
    if (po[v] == -1) throw MalformedInput("vertex " + std::to_string(v) + " not in any part");
  HPartition p;
  p.part_of = po;
  p.parts = parts;
  for (auto& s : p.parts) std::sort(s.begin(), s.end());
  return p;
}

HPartition HPartition::singletons(int n) {
  std::vector<int> po(n);
  for (int v = 0; v < n; ++v) po[v] = v;
  return from_part_of(po, n);
}

int TreeDecomposition::max_bag() const {
  int b = 0;
  for (const auto& bag : bags) b = std::max(b, static_cast<int>(bag.size()));
  return b;
}

int TreeDecomposition::width() const { return max_bag() - 1; }

// ---------------------------------------------------------------------------

std::vector<Edge> validate_layering(const Graph& g, const Layering& l) {
  if (static_cast<int>(l.layer_of.size()) != g.n())
    throw MalformedInput("layering does not cover the vertex set");
  for (int x : l.layer_of)
    if (x < 0) throw MalformedInput("vertex missing from layering");
  std::vector<Edge> bad;
  for (auto [u, v] : g.edges())
    if (std::abs(l.layer_of[u] - l.layer_of[v]) >= 2) bad.emplace_back(u, v);
  return bad;
}

int layered_width(const HPartition& p, const Layering& l, const std::vector<bool>* count_only) {
  if (p.part_of.size() != l.layer_of.size())
    throw MalformedInput("partition and layering cover different vertex sets");
  std::map<std::pair<int, int>, int> cell;
  int best = 0;
  for (int v = 0; v < static_cast<int>(p.part_of.size()); ++v) {
    if (count_only && !(*count_only)[v]) continue;
    int c = ++cell[{p.part_of[v], l.layer_of[v]}];
    best = std::max(best, c);
  }
  return best;
}

Quotient quotient(const Graph& g, const HPartition& p) {
  if (static_cast<int>(p.part_of.size()) != g.n())
    throw MalformedInput("partition does not cover the vertex set");
  Quotient q;
  q.vertex_of_part.assign(p.num_parts(), -1);
  for (int x = 0; x < p.num_parts(); ++x)
    if (!p.parts[x].empty()) {
      q.vertex_of_part[x] = static_cast<int>(q.part_of_vertex.size());
      q.part_of_vertex.push_back(x);
    }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) {
    int a = p.part_of[u], b = p.part_of[v];
    if (a != b) es.emplace_back(q.vertex_of_part[a], q.vertex_of_part[b]);
  }
  q.h = Graph(static_cast<int>(q.part_of_vertex.size()), es);
  return q;
}

TDValidation validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  TDValidation r;
  r.width = td.width();
  const int nn = td.num_nodes();
  auto fail = [&](std::string s) { r.violations.push_back(std::move(s)); };

  if (nn == 0) {
    if (g.n() > 0) fail("no nodes");
    r.valid = r.violations.empty();
    return r;
  }
  // tree shape
  if (static_cast<int>(td.tree_edges.size()) != nn - 1) fail("tree edge count != nodes - 1");
  std::vector<std::vector<int>> tadj(nn);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nn || b >= nn || a == b) {
      fail("bad tree edge");
      continue;
    }
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<char> seen(nn, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b : tadj[a])
        if (!seen[b]) {
          seen[b] = 1;
          ++cnt;
          q.push_back(b);
        }
    }
    if (cnt != nn) fail("tree is disconnected");
  }
  // vertex -> nodes
  std::vector<std::vector<int>> nodes_of(g.n());
  for (int a = 0; a < nn; ++a) {
    std::set<int> uniq;
    for (int v : td.bags[a]) {
      if (v < 0 || v >= g.n()) {
        fail("bag element out of range");
        continue;
      }
      if (!uniq.insert(v).second) continue;
      nodes_of[v].push_back(a);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (nodes_of[v].empty()) fail("vertex " + std::to_string(v) + " in no bag");
  for (auto [u, v] : g.edges()) {
    const auto& A = nodes_of[u];
    const auto& B = nodes_of[v];
    bool ok = false;
    for (std::size_t i = 0, j = 0; i < A.size() && j < B.size();) {
      if (A[i] == B[j]) {
        ok = true;
        break;
      }
      if (A[i] < B[j]) ++i; else ++j;
    }
    if (!ok) fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered");
  }
  // connectivity of each trace: #tree edges inside the trace == |trace| - 1
  std::vector<int> inside(nn, -1);
  for (int v = 0; v < g.n(); ++v) {
    if (nodes_of[v].empty()) continue;
    for (int a : nodes_of[v]) inside[a] = v;
    int internal = 0;
    for (auto [a, b] : td.tree_edges)
      if (a >= 0 && b >= 0 && a < nn && b < nn && inside[a] == v && inside[b] == v) ++internal;
    if (internal != static_cast<int>(nodes_of[v].size()) - 1)
      fail("trace of vertex " + std::to_string(v) + " is disconnected");
  }
  r.valid = r.violations.empty();
  return r;
}

std::vector<ProductCoord> embed_into_product(const Graph& g, const HPartition& p,
                                             const Layering& l) {
  if (static_cast<int>(p.part_of.size()) != g.n() || static_cast<int>(l.layer_of.size()) != g.n())
    throw MalformedInput("partition/layering size mismatch");
  std::map<std::pair<int, int>, int> next_copy;
  std::vector<ProductCoord> emb(g.n());
  for (int v = 0; v < g.n(); ++v) {  // ascending id within each cell
    int x = p.part_of[v], i = l.layer_of[v];
    emb[v] = {x, i, next_copy[{x, i}]++};
  }
  return emb;
}

std::vector<Edge> check_product_embedding(const Graph& g, const HPartition& p,
                                          const std::vector<ProductCoord>& emb, int ell) {
  Quotient q = quotient(g, p);
  std::vector<Edge> bad;
  std::set<ProductCoord> used;
  for (int v = 0; v < g.n(); ++v) {
    if (emb[v][2] < 0 || emb[v][2] >= ell || !used.insert(emb[v]).second) bad.emplace_back(v, v);
  }
  for (auto [u, v] : g.edges()) {
    const auto& a = emb[u];
    const auto& b = emb[v];
    bool part_ok = a[0] == b[0] || q.h.adjacent(q.vertex_of_part[a[0]], q.vertex_of_part[b[0]]);
    bool layer_ok = std::abs(a[1] - b[1]) <= 1;
    if (!part_ok || !layer_ok || a == b) bad.emplace_back(u, v);
  }
  return bad;
}

// ---------------------------------------------------------------------------

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> d(g.n(), -1);
  std::deque<int> q{src};
  d[src] = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : g.neighbours(u))
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push_back(w);
      }
  }
  return d;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::deque<int> q{s};
    comp[s] = static_cast<int>(out.size()) - 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      out.back().push_back(u);
      for (int w : g.neighbours(u))
        if (comp[w] < 0) {
          comp[w] = comp[s];
          q.push_back(w);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> idx(g.n(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) idx[vertices[i]] = i;
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (idx[u] >= 0 && idx[v] >= 0) es.emplace_back(idx[u], idx[v]);
  return Graph(static_cast<int>(vertices.size()), es);
}

Graph graph_union(const Graph& a, const Graph& b) {
  if (a.n() != b.n()) throw MalformedInput("graph_union: vertex counts differ");
  std::vector<Edge> es = a.edges();
  es.insert(es.end(), b.edges().begin(), b.edges().end());
  Graph g(a.n(), es);
  g.labels = a.labels;
  return g;
}

}  // namespace prodstruct

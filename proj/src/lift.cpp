#include "prodstruct/lift.h"

#include <algorithm>
#include <climits>
#include <deque>
#include <set>

#include "prodstruct/errors.h"

namespace prodstruct {

int NormalizedDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

TreeDecomposition NormalizedDecomposition::as_td() const {
  TreeDecomposition td;
  td.bags = bags;
  td.root = root;
  for (int x = 0; x < size(); ++x)
    if (parent[x] >= 0) td.tree_edges.emplace_back(parent[x], x);
  return td;
}

namespace {

void finish_tree(NormalizedDecomposition& nd) {
  const int n = nd.size();
  nd.children.assign(n, {});
  for (int x = 0; x < n; ++x)
    if (nd.parent[x] >= 0) nd.children[nd.parent[x]].push_back(x);
  nd.depth.assign(n, 0);
  nd.tin.assign(n, 0);
  nd.tout.assign(n, 0);
  if (n == 0) return;
  int clock = 0;
  std::vector<std::pair<int, std::size_t>> st{{nd.root, 0}};
  nd.tin[nd.root] = clock++;
  while (!st.empty()) {
    auto& [x, i] = st.back();
    if (i < nd.children[x].size()) {
      int c = nd.children[x][i++];
      nd.depth[c] = nd.depth[x] + 1;
      nd.tin[c] = clock++;
      st.push_back({c, 0});
    } else {
      nd.tout[x] = clock;
      st.pop_back();
    }
  }
}

}  // namespace

NormalizedDecomposition normalize(const Graph& h, const TreeDecomposition& td) {
  TDValidation val = validate_tree_decomposition(h, td);
  if (!val.valid)
    throw MalformedInput("normalize: invalid tree decomposition: " + val.violations.front());
  NormalizedDecomposition nd;
  const int n = h.n();
  if (n == 0) return nd;
  const int nn = td.num_nodes();

  // root the input tree (an empty-bag node above it is implicit)
  std::vector<std::vector<int>> tadj(nn);
  for (auto [a, b] : td.tree_edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  int r0 = td.root >= 0 ? td.root : 0;
  std::vector<int> tpar(nn, -1), order{r0};
  std::vector<char> seen(nn, 0);
  seen[r0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int b : tadj[order[i]])
      if (!seen[b]) {
        seen[b] = 1;
        tpar[b] = order[i];
        order.push_back(b);
      }

  // f(x): topmost node whose bag holds x
  std::vector<int> f(n, -1);
  std::vector<std::vector<int>> pre(nn);
  for (int a : order)
    for (int x : td.bags[a])
      if (f[x] < 0) {
        f[x] = a;
        pre[a].push_back(x);
      }
  for (auto& p : pre) std::sort(p.begin(), p.end());

  // a node with preimages p1 < ... < pm becomes a chain p1 -> ... -> pm;
  // chain node pj keeps (B \ P) + {p1..pj}; preimage-free nodes are contracted
  nd.parent.assign(n, -1);
  nd.bags.assign(n, {});
  std::vector<int> attach(nn, -1);  // lowest chain vertex at or above node a
  std::vector<int> tops;
  for (int a : order) {
    int above = tpar[a] >= 0 ? attach[tpar[a]] : -1;
    if (pre[a].empty()) {
      attach[a] = above;
      continue;
    }
    std::set<int> pset(pre[a].begin(), pre[a].end());
    std::vector<int> base;
    for (int x : td.bags[a])
      if (!pset.count(x)) base.push_back(x);
    int prev = above;
    for (std::size_t j = 0; j < pre[a].size(); ++j) {
      int x = pre[a][j];
      std::vector<int> bag = base;
      bag.insert(bag.end(), pre[a].begin(), pre[a].begin() + j + 1);
      std::sort(bag.begin(), bag.end());
      nd.bags[x] = bag;
      nd.parent[x] = prev;
      if (prev < 0) tops.push_back(x);
      prev = x;
    }
    attach[a] = prev;
  }
  nd.root = tops.front();
  for (std::size_t i = 1; i < tops.size(); ++i) nd.parent[tops[i]] = nd.root;
  finish_tree(nd);
  return nd;
}

std::vector<std::string> check_normalized(const Graph& h, const NormalizedDecomposition& nd) {
  std::vector<std::string> out;
  if (nd.size() != h.n()) {
    out.push_back("node set differs from V(H)");
    return out;
  }
  TDValidation val = validate_tree_decomposition(h, nd.as_td());
  for (auto& v : val.violations) out.push_back("decomposition: " + v);
  for (int y = 0; y < nd.size(); ++y)
    for (int x : nd.bags[y]) {
      if (!nd.is_ancestor(x, y))
        out.push_back("T1: node " + std::to_string(y) + " holds " + std::to_string(x) +
                      " but is not below it");
      if (y != x && !std::binary_search(nd.bags[nd.parent[y]].begin(), nd.bags[nd.parent[y]].end(), x))
        out.push_back("T1: subtree of " + std::to_string(x) + " is not rooted at it");
    }
  for (int x = 0; x < nd.size(); ++x)
    if (!std::binary_search(nd.bags[x].begin(), nd.bags[x].end(), x))
      out.push_back("T1: bag of " + std::to_string(x) + " misses itself");
  for (auto [x, y] : h.edges())
    if (!nd.is_ancestor(x, y) && !nd.is_ancestor(y, x))
      out.push_back("T2: edge " + std::to_string(x) + "-" + std::to_string(y));
  return out;
}

// ---------------------------------------------------------------------------

HierarchySets hierarchy(const Graph& g, const HPartition& p, const NormalizedDecomposition& nd) {
  const int nt = nd.size();
  if (p.num_parts() != nt) throw MalformedInput("hierarchy: partition and tree sizes differ");
  auto in_v = [&](int v, int x) { return nd.is_ancestor(x, p.part_of[v]); };
  HierarchySets hs;
  hs.v_sets.assign(nt, {});
  hs.f_sets.assign(nt, {});
  hs.witnesses.assign(nt, {});
  for (int v = 0; v < g.n(); ++v)
    for (int x = p.part_of[v]; x >= 0; x = nd.parent[x]) hs.v_sets[x].push_back(v);
  for (auto& s : hs.v_sets) std::sort(s.begin(), s.end());
  for (auto [a, b] : g.edges())
    for (int s = 0; s < 2; ++s) {
      int v = s ? b : a, w = s ? a : b;
      for (int x = p.part_of[v]; x >= 0 && !in_v(w, x); x = nd.parent[x]) hs.f_sets[x].push_back(w);
    }
  for (auto& s : hs.f_sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  const int t = nd.width();
  auto fail = [](const std::string& m) { throw ConsistencyError("hierarchy: " + m); };
  auto contains = [](const std::vector<int>& s, int v) { return std::binary_search(s.begin(), s.end(), v); };
  for (int x = 0; x < nt; ++x) {
    const std::string xs = " at node " + std::to_string(x);
    // Y1
    for (int v : hs.v_sets[x])
      for (int w : g.neighbours(v))
        if (!contains(hs.v_sets[x], w) && !contains(hs.f_sets[x], w)) fail("Y1" + xs);
    // Y2
    std::set<int> wit;
    for (int w : hs.f_sets[x]) {
      int a = p.part_of[w];
      if (a == x || !nd.is_ancestor(a, x)) fail("Y2: F-vertex outside strict ancestors" + xs);
      wit.insert(a);
    }
    if (static_cast<int>(wit.size()) > t) fail("Y2: more than t covering ancestors" + xs);
    hs.witnesses[x].assign(wit.begin(), wit.end());
    hs.max_witnesses = std::max(hs.max_witnesses, static_cast<int>(wit.size()));
    // Y3
    for (int v : p.parts[x])
      if (!contains(hs.v_sets[x], v)) fail("Y3" + xs);
    // Y4, Y5 against the parent (transitive)
    int a = nd.parent[x];
    if (a >= 0) {
      for (int v : hs.v_sets[x])
        if (!contains(hs.v_sets[a], v)) fail("Y4" + xs);
      for (int v : hs.f_sets[x])
        if (!contains(hs.v_sets[a], v) && !contains(hs.f_sets[a], v)) fail("Y5" + xs);
    }
  }
  return hs;
}

// ---------------------------------------------------------------------------

namespace {

// a(v) from Z(v) = {v} + internal vertices of every path through v
int anchor_of(int v, const std::vector<std::vector<int>>& paths,
              const std::vector<std::vector<int>>& through, const HPartition& p,
              const NormalizedDecomposition& nd) {
  int best = p.part_of[v];
  std::vector<int> xs{best};
  for (int pi : through[v]) {
    const auto& path = paths[pi];
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      int x = p.part_of[path[i]];
      xs.push_back(x);
      if (nd.depth[x] < nd.depth[best] || (nd.depth[x] == nd.depth[best] && x < best)) best = x;
    }
  }
  for (int x : xs)
    if (!nd.is_ancestor(best, x))
      throw ConsistencyError("anchor of vertex " + std::to_string(v) +
                             " is not an ancestor of every participating node");
  return best;
}

}  // namespace

std::vector<int> anchors(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                         const NormalizedDecomposition& nd, Exec exec) {
  const int n = g.n();
  std::vector<std::vector<int>> through(n);
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& path = s.paths[i];
    if (path.size() < 3) continue;  // no internal vertex: contributes nothing
    for (int v : path) through[v].push_back(static_cast<int>(i));
  }
  std::vector<int> a(n);
  if (exec == Exec::parallel) {
    std::string err;
#pragma omp parallel for schedule(dynamic, 16)
    for (int v = 0; v < n; ++v) {
      try {
        a[v] = anchor_of(v, s.paths, through, p, nd);
      } catch (const ConsistencyError& e) {
#pragma omp critical
        if (err.empty()) err = e.what();
      }
    }
    if (!err.empty()) throw ConsistencyError(err);
  } else {
    for (int v = 0; v < n; ++v) a[v] = anchor_of(v, s.paths, through, p, nd);
  }
  return a;
}

// ---------------------------------------------------------------------------

long long binom(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  long long b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

LiftResult lift_partition(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                          const Layering& l, const NormalizedDecomposition& nd,
                          const LiftOptions& opt) {
  if (s.base.n() != g.n()) throw MalformedInput("lift_partition: system is over another graph");
  ShortcutValidation sv = validate_shortcuts(s);
  if (!sv.violations.empty()) throw MalformedInput("lift_partition: shortcut system has invalid paths");
  if (!validate_layering(g, l).empty()) throw MalformedInput("lift_partition: invalid layering of G");
  ShortcutSystem aug = with_edge_shortcuts(s);

  LiftResult r;
  r.k = std::max(1, sv.k_actual);
  r.d = sv.d_actual;
  r.d_used = std::max(1, r.d);
  r.ell = layered_width(p, l);
  r.t = std::max(0, nd.width());
  r.grouping = opt.grouping > 0 ? opt.grouping : r.k;
  r.fine_cap = static_cast<long long>(r.d_used) * r.ell * (1LL * r.k * r.k + 3);
  // k^3 + 3k when the grouping factor is k
  r.coarse_cap = r.fine_cap * r.grouping;
  r.bag_cap = binom(r.k + r.t, r.t);
  auto fail = [&](bool& flag, const std::string& m) {
    flag = false;
    if (r.failures.size() < 20) r.failures.push_back(m);
  };

  r.gp = apply_shortcuts(aug);
  r.anchor = anchors(g, aug, p, nd, opt.exec);
  const int nt = nd.size();
  r.s_partition = HPartition::from_part_of(r.anchor, nt);

  // S_x within V_x: V_x holds the parts of the subtree at x
  for (int v = 0; v < g.n(); ++v)
    if (!nd.is_ancestor(r.anchor[v], p.part_of[v]))
      fail(r.claim_s_subset, "s-subset: vertex " + std::to_string(v));

  Quotient q = quotient(r.gp, r.s_partition);
  r.j = q.h;
  r.node_of_j.assign(r.j.n(), -1);
  r.j_of_node = q.vertex_of_part;
  for (int x = 0; x < nt; ++x)
    if (q.vertex_of_part[x] >= 0) r.node_of_j[q.vertex_of_part[x]] = x;

  // C_x: x itself plus every ancestor joined in J to a descendant of x
  std::vector<std::set<int>> cbag(nt);
  for (int x = 0; x < nt; ++x)
    if (r.j_of_node[x] >= 0) cbag[x].insert(x);
  for (auto [ja, jb] : r.j.edges()) {
    int a = r.node_of_j[ja], x = r.node_of_j[jb];
    if (nd.is_ancestor(x, a)) std::swap(a, x);
    if (!nd.is_ancestor(a, x)) {
      fail(r.claim_i_ancestor, "i-ancestor: J-edge " + std::to_string(a) + "-" + std::to_string(x));
      continue;
    }
    for (int y = x; y != a; y = nd.parent[y]) cbag[y].insert(a);
  }
  r.c.root = nd.root;
  r.c.bags.resize(nt);
  for (int x = 0; x < nt; ++x) {
    for (int y : cbag[x]) r.c.bags[x].push_back(r.j_of_node[y]);
    std::sort(r.c.bags[x].begin(), r.c.bags[x].end());
    r.max_bag = std::max(r.max_bag, static_cast<int>(cbag[x].size()));
    if (nd.parent[x] >= 0) r.c.tree_edges.emplace_back(nd.parent[x], x);
  }
  TDValidation cv = validate_tree_decomposition(r.j, r.c);
  if (!cv.valid) fail(r.c_valid, "C is not a tree decomposition of J: " + cv.violations.front());
  if (r.max_bag > r.bag_cap) fail(r.bag_size_ok, "bag size " + std::to_string(r.max_bag));

  r.fine_width = layered_width(r.s_partition, l, opt.count_only);
  if (r.fine_width > r.fine_cap) fail(r.fine_width_ok, "fine width " + std::to_string(r.fine_width));
  std::vector<int> coarse(g.n());
  for (int v = 0; v < g.n(); ++v) coarse[v] = l.layer_of[v] / r.grouping;
  r.coarse = Layering::from_layer_of(coarse);
  r.coarse_width = layered_width(r.s_partition, r.coarse, opt.count_only);
  if (r.coarse_width > r.coarse_cap)
    fail(r.coarse_width_ok, "coarse width " + std::to_string(r.coarse_width));
  if (!validate_layering(r.gp, r.coarse).empty())
    fail(r.coarse_layering_ok, "coarse layering is not a layering of G^P");
  else {
    auto emb = embed_into_product(r.gp, r.s_partition, r.coarse);
    int full_width = layered_width(r.s_partition, r.coarse);
    if (!check_product_embedding(r.gp, r.s_partition, emb, full_width).empty())
      fail(r.product_ok, "G^P does not embed in J x P x K");
  }
  return r;
}

// ---------------------------------------------------------------------------

KPlanarResult kplanar_pipeline(const Drawing& d, int k, Exec exec) {
  if (k < 0) throw MalformedInput("kplanar_pipeline needs k >= 0");
  KPlanarResult res;
  res.k = k;
  res.pz = planarize(d);
  res.measured_crossings = res.pz.max_crossings_per_edge;
  if (res.measured_crossings > k)
    throw MalformedInput("drawing is not " + std::to_string(k) + "-plane (an edge has " +
                         std::to_string(res.measured_crossings) + " crossings)");
  PlaneGraph tri = triangulate(res.pz.g0);
  res.lp = tripod_partition(tri);
  res.nd = normalize(res.lp.h, res.lp.td);

  ShortcutSystem s = res.pz.shortcuts;
  s.base = res.lp.g;
  const int n0 = static_cast<int>(d.points.size());
  std::vector<bool> original(res.lp.g.n(), false);
  for (int v = 0; v < n0; ++v) original[v] = true;
  LiftOptions opt;
  opt.grouping = k + 1;
  opt.count_only = &original;
  opt.exec = exec;
  res.lift = lift_partition(res.lp.g, s, res.lp.partition, res.lp.layering, res.nd, opt);
  res.restricted_width = res.lift.coarse_width;
  res.restricted_cap = 18LL * k * k + 48LL * k + 30;
  res.bag_cap = binom(k + 4, 3);
  for (const auto& [u, v] : d.edges)
    if (u != v && !res.lift.gp.adjacent(u, v)) res.drawing_covered = false;
  return res;
}

}  // namespace prodstruct

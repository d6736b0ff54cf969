#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/generators.h"
#include "prodstruct/lift.h"
#include "prodstruct/treewidth.h"

using namespace prodstruct;

namespace {

Point pt(long long x, long long y) { return {Rational(x), Rational(y)}; }

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Drawing k5_one_crossing() {
  std::vector<Edge> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  return {{pt(0, 0), pt(12, 0), pt(6, 12), pt(5, 3), pt(7, 4)}, e};
}

// rooted tree given by parents; bag of x is x plus its parent
NormalizedDecomposition tree_nd(const std::vector<int>& parent) {
  NormalizedDecomposition nd;
  int n = static_cast<int>(parent.size());
  nd.parent = parent;
  nd.children.assign(n, {});
  nd.bags.assign(n, {});
  nd.depth.assign(n, 0);
  nd.tin.assign(n, 0);
  nd.tout.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    if (parent[x] < 0)
      nd.root = x;
    else
      nd.children[parent[x]].push_back(x);
    nd.bags[x] = {x};
    if (parent[x] >= 0) nd.bags[x].push_back(parent[x]);
    std::sort(nd.bags[x].begin(), nd.bags[x].end());
  }
  int clock = 0;
  auto dfs = [&](auto&& self, int x, int dep) -> void {
    nd.depth[x] = dep;
    nd.tin[x] = clock++;
    for (int c : nd.children[x]) self(self, c, dep + 1);
    nd.tout[x] = clock++;
  };
  dfs(dfs, nd.root, 0);
  return nd;
}

ShortcutSystem system(Graph g, std::vector<std::vector<int>> paths, int k, int d) {
  ShortcutSystem s;
  s.base = std::move(g);
  s.paths = std::move(paths);
  s.declared_k = k;
  s.declared_d = d;
  return s;
}

// a(v) straight from the definition: Z = v plus the inner vertices of every
// path through v, then the shallowest node among the parts Z meets
std::vector<int> anchors_oracle(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                                const NormalizedDecomposition& nd) {
  std::vector<std::set<int>> z(g.n());
  for (int v = 0; v < g.n(); ++v) z[v].insert(v);
  for (auto& q : s.paths)
    for (int v : q)
      for (std::size_t i = 1; i + 1 < q.size(); ++i) z[v].insert(q[i]);
  std::vector<int> a(g.n());
  for (int v = 0; v < g.n(); ++v) {
    int best = -1;
    for (int w : z[v]) {
      int x = p.part_of[w];
      if (best < 0 || nd.depth[x] < nd.depth[best]) best = x;
    }
    for (int w : z[v]) CHECK(nd.is_ancestor(best, p.part_of[w]));
    a[v] = best;
  }
  return a;
}

void check_lift(const Graph& g, const ShortcutSystem& s, const HPartition& p, const Layering& l,
                const NormalizedDecomposition& nd, const LiftResult& r) {
  CHECK(r.all_ok());
  CHECK(r.gp == apply_shortcuts(s));
  CHECK(r.anchor == anchors_oracle(g, s, p, nd));
  for (int v = 0; v < g.n(); ++v) {
    CHECK(r.s_partition.part_of[v] == r.anchor[v]);
    CHECK(nd.is_ancestor(r.anchor[v], p.part_of[v]));  // S_x inside V_x
  }
  for (auto [a, b] : r.j.edges()) {
    int x = r.node_of_j[a], y = r.node_of_j[b];
    CHECK((nd.is_ancestor(x, y) || nd.is_ancestor(y, x)));
  }
  CHECK(quotient(r.gp, r.s_partition).h.m() == r.j.m());
  auto v = validate_tree_decomposition(r.j, r.c);
  CHECK(v.valid);
  auto sv = validate_shortcuts(s);
  int k = std::max(1, sv.k_actual), d = std::max(1, sv.d_actual);
  int ell = layered_width(p, l), t = nd.width();
  CHECK(v.width + 1 <= binom(k + t, t));
  CHECK(layered_width(r.s_partition, l) <= 1LL * d * ell * (k * k + 3));
  CHECK(validate_layering(r.gp, r.coarse).empty());
  CHECK(layered_width(r.s_partition, r.coarse) <= 1LL * d * ell * (k * k + 3) * r.grouping);
  auto emb = embed_into_product(r.gp, r.s_partition, r.coarse);
  CHECK(check_product_embedding(r.gp, r.s_partition, emb, r.coarse_width).empty());
}

}  // namespace

TEST_CASE("normalize examples") {
  TreeDecomposition one;
  one.bags = {{0}};
  NormalizedDecomposition n1 = normalize(Graph(1), one);
  CHECK(n1.root == 0);
  CHECK(n1.size() == 1);

  Graph p3 = path(3);
  TreeDecomposition td;
  td.bags = {{0, 1}, {1, 2}};
  td.tree_edges = {{0, 1}};
  NormalizedDecomposition n3 = normalize(p3, td);
  CHECK(check_normalized(p3, n3).empty());
  for (auto [u, v] : p3.edges()) CHECK((n3.is_ancestor(u, v) || n3.is_ancestor(v, u)));
  CHECK(n3.width() <= 1);

  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  TreeDecomposition all;
  all.bags = {{0, 1, 2, 3}};
  NormalizedDecomposition n4 = normalize(k4, all);
  CHECK(check_normalized(k4, n4).empty());
  for (int x = 0; x < 4; ++x) {
    CHECK(n4.children[x].size() <= 1);
    CHECK(n4.bags[x].size() <= 4);
  }

  TreeDecomposition bad;
  bad.bags = {{0, 1}};
  CHECK_THROWS_AS(normalize(p3, bad), MalformedInput);
}

TEST_CASE("normalize random decompositions") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph h = random_graph(25, 3.0, seed);
    auto tw = treewidth_heuristic(h);
    NormalizedDecomposition nd = normalize(h, tw.td);
    CHECK(check_normalized(h, nd).empty());
    CHECK(nd.width() <= tw.width);
    CHECK(validate_tree_decomposition(h, nd.as_td()).valid);
    for (int x = 0; x < nd.size(); ++x)
      for (int y = 0; y < nd.size(); ++y) {
        bool up = false;
        for (int z = y; z >= 0; z = nd.parent[z]) up = up || z == x;
        CHECK(nd.is_ancestor(x, y) == up);
      }
  }
}

TEST_CASE("check_normalized catches a broken tree") {
  Graph p3 = path(3);
  // 0 and 1 are siblings under 2, so the edge 0-1 has no ancestor relation
  NormalizedDecomposition nd = tree_nd({2, 2, -1});
  CHECK_FALSE(check_normalized(p3, nd).empty());
}

TEST_CASE("hierarchy sets") {
  Graph p4 = path(4);
  NormalizedDecomposition nd = tree_nd({-1, 0, 1, 2});
  REQUIRE(check_normalized(p4, nd).empty());
  HierarchySets hs = hierarchy(p4, HPartition::singletons(4), nd);
  for (int x = 0; x < 4; ++x) {
    std::vector<int> suffix;
    for (int v = x; v < 4; ++v) suffix.push_back(v);
    CHECK(hs.v_sets[x] == suffix);
    if (x == 0)
      CHECK(hs.f_sets[x].empty());
    else
      CHECK(hs.f_sets[x] == std::vector<int>{x - 1});
  }
  HierarchySets one = hierarchy(p4, HPartition::from_parts(4, {{0, 1, 2, 3}}), tree_nd({-1}));
  CHECK(one.v_sets[0].size() == 4);
  CHECK(one.f_sets[0].empty());
}

TEST_CASE("hierarchy over tripod partitions") {
  for (int seed = 0; seed < 20; ++seed) {
    LayeredPartition lp = tripod_partition(random_triangulation(80, seed));
    NormalizedDecomposition nd = normalize(lp.h, lp.td);
    HierarchySets hs = hierarchy(lp.g, lp.partition, nd);
    CHECK(hs.max_witnesses <= 3);
    for (int x = 0; x < nd.size(); ++x) {
      std::set<int> vx(hs.v_sets[x].begin(), hs.v_sets[x].end());
      for (int v = 0; v < lp.g.n(); ++v)
        CHECK(static_cast<bool>(vx.count(v)) == nd.is_ancestor(x, lp.partition.part_of[v]));
      std::set<int> fx;
      for (int v : vx)
        for (int w : lp.g.neighbours(v))
          if (!vx.count(w)) fx.insert(w);
      CHECK(std::vector<int>(fx.begin(), fx.end()) == hs.f_sets[x]);
      for (int a : hs.witnesses[x]) CHECK((a != x && nd.is_ancestor(a, x)));
    }
  }
}

TEST_CASE("anchors examples") {
  Graph p5 = path(5);
  NormalizedDecomposition chain = tree_nd({-1, 0, 1, 2, 3});
  ShortcutSystem abc = system(p5, {{0, 1, 2}}, 2, 1);
  CHECK(anchors(p5, abc, HPartition::singletons(5), chain) == std::vector<int>{0, 1, 1, 3, 4});
  CHECK(anchors(p5, system(p5, {}, 1, 0), HPartition::singletons(5), chain) ==
        std::vector<int>{0, 1, 2, 3, 4});

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  NormalizedDecomposition rooted = tree_nd({-1, 0, 0, 0});
  auto a = anchors(star, system(star, {{1, 0, 2}}, 2, 1), HPartition::singletons(4), rooted);
  CHECK(a == std::vector<int>{0, 0, 0, 3});
}

TEST_CASE("lift with edges only") {
  for (int seed = 0; seed < 10; ++seed) {
    LayeredPartition lp = tripod_partition(random_triangulation(60, seed));
    NormalizedDecomposition nd = normalize(lp.h, lp.td);
    ShortcutSystem s = system(lp.g, {}, 1, 0);
    LiftResult r = lift_partition(lp.g, s, lp.partition, lp.layering, nd);
    CHECK(r.gp == lp.g);
    CHECK(r.d_used == 1);
    CHECK(r.max_bag <= nd.width() + 1);
    check_lift(lp.g, s, lp.partition, lp.layering, nd, r);
  }
}

TEST_CASE("lift of P5 with its square") {
  Graph p5 = path(5);
  ShortcutSystem s = system(p5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}, 2, 1);
  NormalizedDecomposition nd = tree_nd({-1, 0, 1, 2, 3});
  Layering l = Layering::from_layers(5, {{0}, {1}, {2}, {3}, {4}});
  LiftResult r = lift_partition(p5, s, HPartition::singletons(5), l, nd);
  check_lift(p5, s, HPartition::singletons(5), l, nd, r);
  CHECK(r.bag_cap == 3);
  CHECK(r.max_bag <= 3);
  CHECK(r.fine_cap == 7);
  CHECK(treewidth_exact(r.j).width <= 2);
}

TEST_CASE("lift over random shortcut systems") {
  for (int seed = 0; seed < 40; ++seed) {
    LayeredPartition lp = tripod_partition(random_triangulation(50 + seed, seed));
    NormalizedDecomposition nd = normalize(lp.h, lp.td);
    int k = 2 + seed % 3, d = 1 + seed % 3;
    ShortcutSystem s = random_shortcuts(lp.g, k, d, 30, seed);
    LiftResult r = lift_partition(lp.g, s, lp.partition, lp.layering, nd);
    check_lift(lp.g, s, lp.partition, lp.layering, nd, r);
    if (r.j.n() <= 20) CHECK(treewidth_exact(r.j).width + 1 <= r.bag_cap);
  }
}

TEST_CASE("lift over singleton partitions of arbitrary graphs") {
  for (int seed = 0; seed < 20; ++seed) {
    Graph g = random_graph(30, 2.5, seed);
    auto tw = treewidth_heuristic(g);
    NormalizedDecomposition nd = normalize(g, tw.td);
    std::vector<int> layer(g.n(), 0);
    for (auto& comp : connected_components(g)) {
      auto dist = bfs_distances(g, comp.front());
      for (int v : comp) layer[v] = dist[v];
    }
    Layering l = Layering::from_layer_of(layer);
    ShortcutSystem s = random_shortcuts(g, 3, 2, 20, seed);
    LiftResult r = lift_partition(g, s, HPartition::singletons(g.n()), l, nd);
    check_lift(g, s, HPartition::singletons(g.n()), l, nd, r);
  }
}

TEST_CASE("k-planar pipeline") {
  KPlanarResult k5 = kplanar_pipeline(k5_one_crossing(), 1);
  CHECK(k5.ok());
  CHECK(k5.restricted_cap == 96);
  CHECK(k5.restricted_width <= 96);
  CHECK(k5.bag_cap == 10);
  CHECK(k5.lift.max_bag <= 10);
  if (k5.lift.j.n() <= 20) CHECK(treewidth_exact(k5.lift.j).width <= 9);

  Drawing plane = random_kplane_drawing(60, 0, 3);
  KPlanarResult r0 = kplanar_pipeline(plane, 0);
  CHECK(r0.ok());
  CHECK(r0.restricted_cap == 30);
  CHECK(r0.pz.g0.num_crossings() == 0);

  for (int seed = 0; seed < 5; ++seed) {
    KPlanarResult r2 = kplanar_pipeline(random_kplane_drawing(120, 2, seed), 2);
    CHECK(r2.ok());
    CHECK(r2.restricted_width <= 198);
    CHECK(r2.lift.max_bag <= 20);
    CHECK(r2.drawing_covered);
  }
  CHECK_THROWS_AS(kplanar_pipeline(k5_one_crossing(), 0), MalformedInput);
}

TEST_CASE("binom") {
  CHECK(binom(5, 3) == 10);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);
}

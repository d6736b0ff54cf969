#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prodstruct/colouring.h"
#include "prodstruct/generators.h"
#include "prodstruct/lift.h"
#include "prodstruct/shortcut.h"
#include "prodstruct/treewidth.h"

using namespace prodstruct;

// each parallel kernel must reproduce its serial reference exactly

TEST_CASE("treewidth_exact serial and parallel") {
  for (int seed = 0; seed < 12; ++seed) {
    Graph g = random_graph(10 + seed % 7, 3.0, seed);
    auto s = treewidth_exact(g, kDefaultExactTwCap, Exec::serial);
    auto p = treewidth_exact(g, kDefaultExactTwCap, Exec::parallel);
    CHECK(s.width == p.width);
    CHECK(s.td.bags == p.td.bags);
    CHECK(s.td.tree_edges == p.td.tree_edges);
  }
}

TEST_CASE("anchors serial and parallel") {
  for (int seed = 0; seed < 10; ++seed) {
    LayeredPartition lp = tripod_partition(random_triangulation(150, seed));
    NormalizedDecomposition nd = normalize(lp.h, lp.td);
    ShortcutSystem s = random_shortcuts(lp.g, 3, 3, 200, seed);
    CHECK(anchors(lp.g, s, lp.partition, nd, Exec::serial) ==
          anchors(lp.g, s, lp.partition, nd, Exec::parallel));
    LiftOptions a, b;
    a.exec = Exec::serial;
    b.exec = Exec::parallel;
    LiftResult ra = lift_partition(lp.g, s, lp.partition, lp.layering, nd, a);
    LiftResult rb = lift_partition(lp.g, s, lp.partition, lp.layering, nd, b);
    CHECK(ra.j == rb.j);
    CHECK(ra.c.bags == rb.c.bags);
    CHECK(ra.coarse_width == rb.coarse_width);
  }
}

TEST_CASE("power_shortcuts serial and parallel") {
  for (int seed = 0; seed < 10; ++seed) {
    Graph g = random_graph(80, 3.0, seed);
    int k = 1 + seed % 3;
    CHECK(power_shortcuts(g, k, Exec::serial).paths == power_shortcuts(g, k, Exec::parallel).paths);
  }
}

TEST_CASE("count_crossings serial and parallel") {
  for (int seed = 0; seed < 6; ++seed) {
    GeometricGraph gg = knn_build(random_points(300, seed), 2);
    CHECK(count_crossings(gg.points, gg.g.edges(), Exec::serial) ==
          count_crossings(gg.points, gg.g.edges(), Exec::parallel));
    KnnStats a = knn_crossing_stats(gg, 2, Exec::serial), b = knn_crossing_stats(gg, 2, Exec::parallel);
    CHECK(a.total_crossings == b.total_crossings);
  }
}

TEST_CASE("check_p_centered serial and parallel") {
  for (int seed = 0; seed < 30; ++seed) {
    Graph g = random_graph(14, 2.5, seed);
    Rng rng(seed);
    Colouring c(g.n());
    for (int& x : c) x = static_cast<int>(rng.below(6));
    int p = 1 + seed % 3;
    auto s = check_p_centered(g, p, c, kDefaultCheckerCap, Exec::serial);
    auto q = check_p_centered(g, p, c, kDefaultCheckerCap, Exec::parallel);
    CHECK(s.valid == q.valid);
    CHECK(s.witness == q.witness);
  }
}

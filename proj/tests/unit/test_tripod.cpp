#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/generators.h"
#include "prodstruct/planar.h"
#include "prodstruct/treewidth.h"

using namespace prodstruct;

namespace {

int dart_between(const PlaneGraph& g, int u, int v) {
  for (int d : g.rotation(u))
    if (g.head(d) == v) return d;
  return -1;
}

PlaneGraph k4() {
  PlaneGraph g = PlaneGraph::from_faces(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}, {0, 2, 1}});
  g.set_outer_dart(dart_between(g, 0, 2));
  return g;
}

// north pole 0, south pole 1, equator 2,3,4,5
PlaneGraph octahedron() {
  PlaneGraph g = PlaneGraph::from_faces(6, {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 2},
                                            {3, 2, 1}, {4, 3, 1}, {5, 4, 1}, {2, 5, 1}});
  g.set_outer_dart(dart_between(g, 3, 2));
  return g;
}

void check_partition(const LayeredPartition& lp) {
  const Graph& g = lp.g;
  CHECK(validate_layering(g, lp.layering).empty());
  CHECK(layered_width(lp.partition, lp.layering) <= 3);
  CHECK(quotient(g, lp.partition).h == lp.h);
  CHECK(is_planar(lp.h));
  if (lp.h.n() >= 3) CHECK(static_cast<long long>(lp.h.m()) <= 3LL * lp.h.n() - 6);
  auto v = validate_tree_decomposition(lp.h, lp.td);
  CHECK(v.valid);
  CHECK(lp.td.max_bag() <= 4);
  // every part is a triangle plus disjoint vertical paths
  std::vector<int> covered(g.n(), 0);
  for (const Tripod& t : lp.tripods) {
    std::set<int> body(t.tau.begin(), t.tau.end());
    std::set<int> seen;
    for (const auto& q : t.paths) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(seen.insert(q[i]).second);
        body.insert(q[i]);
        if (i + 1 < q.size()) CHECK(lp.bfs_parent[q[i]] == q[i + 1]);
      }
    }
    for (int v2 : t.kite_vertices) body.insert(v2);
    if (t.part < 0) continue;
    for (int v2 : lp.partition.parts[t.part]) {
      CHECK(body.count(v2));
      ++covered[v2];
    }
  }
  // outer triangle vertices are singleton parts of their own
  for (int o : lp.outer) {
    CHECK(covered[o] == 0);
    CHECK(lp.partition.parts[lp.partition.part_of[o]].size() == 1);
    ++covered[o];
  }
  for (int v2 = 0; v2 < g.n(); ++v2) CHECK(covered[v2] == 1);
}

}  // namespace

TEST_CASE("tripod partition of K4") {
  LayeredPartition lp = tripod_partition(k4());
  check_partition(lp);
  // the outer triangle vertices start as three singleton paths; the inner
  // vertex forms the single tripod inside
  CHECK(lp.h.n() == 4);
  CHECK(treewidth_exact(lp.h).width <= 3);
  CHECK(lp.layering.layers.size() == 2);
}

TEST_CASE("tripod partition of the octahedron") {
  LayeredPartition lp = tripod_partition(octahedron());
  check_partition(lp);
  CHECK(validate_tree_decomposition(lp.h, lp.td).width <= 3);
}

TEST_CASE("tripod partition of random triangulations") {
  for (int seed = 0; seed < 100; ++seed) {
    PlaneGraph t = random_triangulation(200, seed);
    LayeredPartition lp = tripod_partition(t);
    check_partition(lp);
  }
}

TEST_CASE("tripod partition with another outer face") {
  PlaneGraph t = random_triangulation(60, 3);
  FaceSet fs = t.faces();
  for (int f = 0; f < fs.size(); f += 17) {
    PlaneGraph c = t;
    c.set_outer_dart(fs.darts[f][0]);
    check_partition(tripod_partition(c));
  }
}

TEST_CASE("tripod partition rejects non-triangulations") {
  PlaneGraph sq = PlaneGraph::from_faces(4, {{0, 1, 2, 3}, {3, 2, 1, 0}});
  CHECK_THROWS_AS(tripod_partition(sq), StructureError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/generators.h"
#include "prodstruct/graph.h"

using namespace prodstruct;

namespace {

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

}  // namespace

TEST_CASE("graph construction") {
  Graph g(4, {{1, 0}, {0, 1}, {2, 3}});
  CHECK(g.m() == 2);
  CHECK(g.edges().front() == Edge{0, 1});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), MalformedInput);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), MalformedInput);
}

TEST_CASE("validate_layering") {
  Graph p4 = path(4);
  CHECK(validate_layering(p4, Layering::from_layers(4, {{0}, {1}, {2}, {3}})).empty());
  // a,c in layer 0 and b,d in layer 1: every path edge spans one layer
  CHECK(validate_layering(p4, Layering::from_layers(4, {{0, 2}, {1, 3}})).empty());
  auto bad = validate_layering(triangle(), Layering::from_layers(3, {{0}, {1}, {2}}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == Edge{0, 2});
  CHECK_THROWS_AS(Layering::from_layers(4, {{0}, {1}, {2}}), MalformedInput);
  CHECK_THROWS_AS(Layering::from_layers(3, {{0, 1}, {1, 2}}), MalformedInput);
}

TEST_CASE("layered_width") {
  Graph p4 = path(4);
  Layering bfs = Layering::from_layers(4, {{0}, {1}, {2}, {3}});
  CHECK(layered_width(HPartition::singletons(4), bfs) == 1);
  CHECK(layered_width(HPartition::from_parts(4, {{0, 1, 2, 3}}),
                      Layering::from_layers(4, {{0, 1, 2, 3}})) == 4);
  HPartition ab_cd = HPartition::from_parts(4, {{0, 1}, {2, 3}});
  CHECK(layered_width(ab_cd, Layering::from_layers(4, {{0, 2}, {1, 3}})) == 1);
  std::vector<bool> only{true, false, true, true};
  CHECK(layered_width(HPartition::from_parts(4, {{0, 1, 2, 3}}),
                      Layering::from_layers(4, {{0, 1, 2, 3}}), &only) == 3);
}

TEST_CASE("quotient") {
  Graph p4 = path(4);
  CHECK(quotient(p4, HPartition::singletons(4)).h == p4);
  Quotient one = quotient(p4, HPartition::from_parts(4, {{0, 1, 2, 3}}));
  CHECK(one.h.n() == 1);
  CHECK(one.h.m() == 0);
  Quotient k2 = quotient(p4, HPartition::from_parts(4, {{0, 1}, {2, 3}}));
  CHECK(k2.h == Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(HPartition::from_parts(4, {{0, 1}, {1, 2, 3}}), MalformedInput);
  // empty parts are dropped
  Quotient e = quotient(p4, HPartition::from_part_of({0, 0, 2, 2}, 3));
  CHECK(e.h.n() == 2);
  CHECK(e.vertex_of_part[1] == -1);
}

TEST_CASE("quotient matches its definition on random partitions") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(15, 3.0, seed);
    Rng rng(seed);
    std::vector<int> part_of(g.n());
    for (int& x : part_of) x = static_cast<int>(rng.below(5));
    HPartition p = HPartition::from_part_of(part_of, 5);
    Quotient q = quotient(g, p);
    std::set<Edge> expect;
    for (auto [u, v] : g.edges()) {
      int a = q.vertex_of_part[part_of[u]], b = q.vertex_of_part[part_of[v]];
      if (a != b) expect.insert(std::minmax(a, b));
    }
    CHECK(std::set<Edge>(q.h.edges().begin(), q.h.edges().end()) == expect);
  }
}

TEST_CASE("validate_tree_decomposition") {
  Graph p3 = path(3);
  TreeDecomposition all;
  all.bags = {{0, 1, 2}};
  auto v1 = validate_tree_decomposition(p3, all);
  CHECK(v1.valid);
  CHECK(v1.width == 2);

  TreeDecomposition two;
  two.bags = {{0, 1}, {1, 2}};
  two.tree_edges = {{0, 1}};
  auto v2 = validate_tree_decomposition(p3, two);
  CHECK(v2.valid);
  CHECK(v2.width == 1);

  TreeDecomposition miss;
  miss.bags = {{0, 1}, {2}};
  miss.tree_edges = {{0, 1}};
  CHECK_FALSE(validate_tree_decomposition(p3, miss).valid);

  // vertex 0 in two bags joined only through a bag without it
  TreeDecomposition broken;
  broken.bags = {{0, 1}, {1, 2}, {0, 2}};
  broken.tree_edges = {{0, 1}, {1, 2}};
  CHECK_FALSE(validate_tree_decomposition(triangle(), broken).valid);

  TreeDecomposition not_tree;
  not_tree.bags = {{0, 1}, {1, 2}, {0, 2}};
  not_tree.tree_edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_FALSE(validate_tree_decomposition(triangle(), not_tree).valid);
}

TEST_CASE("embed_into_product") {
  Graph p4 = path(4);
  auto bfs = Layering::from_layers(4, {{0}, {1}, {2}, {3}});
  auto s = HPartition::singletons(4);
  auto emb = embed_into_product(p4, s, bfs);
  for (auto& c : emb) CHECK(c[2] == 0);
  CHECK(check_product_embedding(p4, s, emb, 1).empty());

  auto one = HPartition::from_parts(3, {{0, 1, 2}});
  auto flat = Layering::from_layers(3, {{0, 1, 2}});
  auto e3 = embed_into_product(triangle(), one, flat);
  std::set<int> copies{e3[0][2], e3[1][2], e3[2][2]};
  CHECK(copies == std::set<int>{0, 1, 2});
  CHECK(check_product_embedding(triangle(), one, e3, 3).empty());

  auto ab_cd = HPartition::from_parts(4, {{0, 1}, {2, 3}});
  auto lay = Layering::from_layers(4, {{0, 2}, {1, 3}});
  auto e4 = embed_into_product(p4, ab_cd, lay);
  CHECK(check_product_embedding(p4, ab_cd, e4, 1).empty());
  // b-c: adjacent parts, adjacent layers
  CHECK(e4[1][0] != e4[2][0]);
  CHECK(e4[1][1] != e4[2][1]);
}

TEST_CASE("product embedding holds for BFS layerings and random partitions") {
  for (int seed = 0; seed < 40; ++seed) {
    Graph g = random_graph(20, 3.0, seed);
    std::vector<int> layer(g.n(), -1);
    for (auto& comp : connected_components(g)) {
      auto d = bfs_distances(g, comp.front());
      for (int v : comp) layer[v] = d[v];
    }
    Layering l = Layering::from_layer_of(layer);
    REQUIRE(validate_layering(g, l).empty());
    Rng rng(seed);
    std::vector<int> part_of(g.n());
    for (int& x : part_of) x = static_cast<int>(rng.below(6));
    HPartition p = HPartition::from_part_of(part_of, 6);
    auto emb = embed_into_product(g, p, l);
    int ell = layered_width(p, l);
    for (auto& c : emb) CHECK(c[2] < ell);
    CHECK(check_product_embedding(g, p, emb, ell).empty());
  }
}

TEST_CASE("helpers") {
  Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(connected_components(g).size() == 2);
  CHECK_FALSE(is_connected(g));
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, -1, -1});
  Graph sub = induced_subgraph(g, {2, 1, 0});
  CHECK(sub == Graph(3, {{0, 1}, {1, 2}}));
  CHECK(graph_union(g, Graph(5, {{0, 4}})).m() == 4);
}

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "prodstruct/errors.h"
#include "prodstruct/planar.h"

namespace prodstruct {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

BGraph to_boost(const Graph& g) {
  BGraph b(g.n());
  int idx = 0;
  for (const auto& [u, v] : g.edges()) {
    auto [e, ok] = boost::add_edge(u, v, b);
    (void)ok;
    boost::put(boost::edge_index, b, e, idx++);
  }
  return b;
}

}  // namespace

bool is_planar(const Graph& g) {
  if (g.n() >= 3 && g.m() > 3 * static_cast<std::size_t>(g.n()) - 6) return false;
  BGraph b = to_boost(g);
  return boost::boyer_myrvold_planarity_test(b);
}

PlaneGraph planar_embedding(const Graph& g) {
  BGraph b = to_boost(g);
  std::vector<std::vector<BEdge>> emb(g.n());
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = b,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(), boost::get(boost::vertex_index, b)));
  if (!ok) throw EmbeddingError("graph is not planar");
  const auto& edges = g.edges();
  std::vector<std::vector<int>> rot(g.n());
  for (int v = 0; v < g.n(); ++v)
    for (const BEdge& e : emb[v]) {
      int id = boost::get(boost::edge_index, b, e);
      rot[v].push_back(2 * id + (edges[id].first == v ? 0 : 1));
    }
  return PlaneGraph::from_rotation(g.n(), edges, rot);
}

}  // namespace prodstruct

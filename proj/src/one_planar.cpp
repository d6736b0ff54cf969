#include <algorithm>
#include <array>

#include "face_ops.h"
#include "prodstruct/errors.h"
#include "prodstruct/planar.h"
#include "tripod_engine.h"

namespace prodstruct {

namespace {

void check_one_plane(const PlaneGraph& g) {
  for (int v = 0; v < g.n(); ++v) {
    if (!g.is_crossing(v)) continue;
    if (g.degree(v) != 4) throw StructureError("crossing vertex does not have degree 4");
    for (int d : g.rotation(v))
      if (g.is_crossing(g.head(d)))
        throw StructureError("not 1-plane: an edge is crossed more than once");
  }
}

std::array<int, 4> heads_at(const PlaneGraph& g, int c) {
  std::array<int, 4> a{};
  for (int i = 0; i < 4; ++i) a[i] = g.head(g.rotation(c)[i]);
  return a;
}

// Redraws two edges u-x, u-y crossing at c so that they only touch at c,
// then bypasses c. The edge set is unchanged.
bool uncross_adjacent(PlaneGraph& g, int c) {
  auto a = heads_at(g, c);
  int i = -1;
  for (int j = 0; j < 4; ++j)
    if (a[j] == a[(j + 1) % 4]) i = j;
  if (i < 0) return false;
  if (a[(i + 2) % 4] == a[(i + 3) % 4]) throw StructureError("two parallel edges cross each other");
  std::array<int, 4> r{};
  for (int j = 0; j < 4; ++j) r[j] = g.rotation(c)[j];
  auto at = [&](int j) { return r[((j % 4) + 4) % 4]; };
  g.add_edge(PlaneGraph::twin(at(i)), PlaneGraph::twin(at(i - 1)));
  g.add_edge(PlaneGraph::twin(at(i + 1)), PlaneGraph::twin(at(i + 2)));
  if (g.outer_dart() >= 0)
    for (int d : r)
      if (PlaneGraph::edge_of(g.outer_dart()) == PlaneGraph::edge_of(d)) g.set_outer_dart(-1);
  for (int d : r) g.remove_edge(PlaneGraph::edge_of(d));
  g.set_crossing(c, false);
  return true;
}

int face_length(const PlaneGraph& g, int d0) {
  int len = 0, d = d0;
  do {
    ++len;
    d = g.next_in_face(d);
  } while (d != d0);
  return len;
}

}  // namespace

PlaneGraph edge_maximalize_1plane(const PlaneGraph& input) {
  PlaneGraph g = input.compacted();
  check_one_plane(g);
  if (!g.euler_ok()) throw EmbeddingError("rotation system is not planar");

  // adjacent-edge crossings
  std::vector<int> dropped;
  for (int c = 0; c < g.n(); ++c)
    if (g.is_crossing(c) && uncross_adjacent(g, c)) dropped.push_back(c);
  if (!dropped.empty()) {
    std::vector<int> new_of_old(g.n());
    int k = 0;
    for (int v = 0; v < g.n(); ++v)
      new_of_old[v] = std::binary_search(dropped.begin(), dropped.end(), v) ? -1 : k++;
    g = g.relabeled(new_of_old, k);
  }
  int real = 0;
  for (int v = 0; v < g.n(); ++v)
    if (!g.is_crossing(v)) ++real;
  if (real < 3) throw SizeLimit("edge_maximalize_1plane needs at least 3 real vertices");

  // join components through real vertices
  auto comps = connected_components(g.simple_graph());
  auto first_real = [&](const std::vector<int>& comp) {
    for (int v : comp)
      if (!g.is_crossing(v)) return v;
    throw StructureError("component without real vertices");
  };
  for (std::size_t c = 1; c < comps.size(); ++c) {
    int u = first_real(comps[0]), v = first_real(comps[c]);
    int du = g.degree(u) ? g.rotation(u).back() : -1;
    int dv = g.degree(v) ? g.rotation(v).back() : -1;
    g.add_edge(du, dv, u, v);
  }

  // sail edges next to every crossing
  for (int c = 0; c < g.n(); ++c) {
    if (!g.is_crossing(c)) continue;
    for (int i = 0; i < 4; ++i) {
      int y = g.rotation(c)[i];
      int x = PlaneGraph::twin(g.rotation(c)[(i + 1) % 4]);
      if (face_length(g, y) <= 3) continue;
      int z = g.next_in_face(y);
      g.add_edge(z, x);
    }
  }

  // triangulate the remaining real faces
  detail::PairSet adj(g);
  for (int c = 0; c < g.n(); ++c)
    if (g.is_crossing(c)) {
      auto a = heads_at(g, c);
      adj.add(a[0], a[2]);
      adj.add(a[1], a[3]);
    }
  for (;;) {
    FaceSet fs = g.faces();
    int target = -1;
    for (int f = 0; f < fs.size() && target < 0; ++f)
      if (fs.darts[f].size() > 3) target = f;
    if (target < 0) break;
    for (int d : fs.darts[target])
      if (g.is_crossing(g.tail(d))) throw ConsistencyError("crossing vertex on an uncut face");
    if (!detail::add_face_chord(g, fs.darts[target], adj, true))
      throw StructureError("edge_maximalize_1plane: face cannot be triangulated");
  }
  if (g.outer_dart() < 0) g.set_outer_dart(0);
  return g;
}

OnePlanarResult one_planar_partition(const PlaneGraph& maximal) {
  PlaneGraph w = maximal.compacted();
  check_one_plane(w);
  const int nn = w.n();
  OnePlanarResult res;
  res.real_of.assign(nn, -1);
  int nreal = 0;
  for (int v = 0; v < nn; ++v)
    if (!w.is_crossing(v)) res.real_of[v] = nreal++;
  if (nreal < 3) throw SizeLimit("one_planar_partition needs at least 3 real vertices");

  // outer face: kept if it is a real triangle
  int outer = w.outer_dart() >= 0 ? w.outer_dart() : 0;
  {
    bool ok = face_length(w, outer) == 3;
    for (int d = outer, k = 0; ok && k < 3; ++k, d = w.next_in_face(d))
      if (w.is_crossing(w.tail(d))) ok = false;
    if (!ok) outer = -1;
  }
  w.set_outer_dart(outer);

  auto has_direct = [&](int u, int v) {
    for (int d : w.rotation(u))
      if (w.head(d) == v) return true;
    return false;
  };
  std::vector<std::pair<int, std::array<int, 2>>> kept;  // new edge id -> removed spar
  std::vector<Edge> removed;
  for (int c = 0; c < nn; ++c) {
    if (!w.is_crossing(c)) continue;
    auto a = heads_at(w, c);
    std::array<int, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = w.rotation(c)[i];
    // remove the spar (a[s], a[s+2])
    int s;
    bool p0 = has_direct(a[0], a[2]), p1 = has_direct(a[1], a[3]);
    if (p0 != p1)
      s = p0 ? 0 : 1;
    else
      s = std::minmax(a[0], a[2]) > std::minmax(a[1], a[3]) ? 0 : 1;
    int t = 1 - s;
    int e = w.add_edge(PlaneGraph::twin(r[t]), PlaneGraph::twin(r[t + 2]));
    for (int d : r) w.remove_edge(PlaneGraph::edge_of(d));
    kept.push_back({e, {res.real_of[a[s]], res.real_of[a[s + 2]]}});
    removed.emplace_back(res.real_of[a[s]], res.real_of[a[s + 2]]);
  }
  res.num_kites = static_cast<int>(kept.size());
  std::vector<int> emap;
  res.g_prime = w.relabeled(res.real_of, nreal, &emap);
  for (int v = 0; v < nreal; ++v) res.g_prime.set_crossing(v, false);
  if (!res.g_prime.is_triangulation())
    throw StructureError("spar-removed graph is not a simple plane triangulation");

  detail::TripodInput in;
  in.gp = &res.g_prime;
  in.kite.assign(res.g_prime.num_edges(), {-1, -1});
  for (auto& [e, pair] : kept) in.kite[emap[e]] = pair;
  if (res.g_prime.outer_dart() < 0) {
    FaceSet fs = res.g_prime.faces();
    for (int f = 0; f < fs.size() && res.g_prime.outer_dart() < 0; ++f) {
      bool clean = true;
      for (int d : fs.darts[f])
        if (in.kite[PlaneGraph::edge_of(d)][0] >= 0) clean = false;
      if (clean) res.g_prime.set_outer_dart(fs.darts[f][0]);
    }
    if (res.g_prime.outer_dart() < 0) throw StructureError("no face with uncrossed edges");
  }
  in.outer_dart = res.g_prime.outer_dart();
  detail::TripodOutput o = detail::run_tripod(in);

  LayeredPartition& lp = res.lp;
  lp.g = graph_union(res.g_prime.simple_graph(), Graph(nreal, removed));
  lp.partition = HPartition::from_part_of(o.part_of, o.num_parts);
  lp.h = quotient(lp.g, lp.partition).h;
  lp.td = std::move(o.td);
  std::vector<int> layer(nreal), paired(nreal);
  for (int v = 0; v < nreal; ++v) {
    layer[v] = o.dist[v] - 1;
    paired[v] = layer[v] / 2;
  }
  lp.layering = Layering::from_layer_of(layer);
  res.paired = Layering::from_layer_of(paired);
  lp.bfs_parent = std::move(o.parent);
  lp.tripods = std::move(o.tripods);
  lp.outer = o.outer;
  return res;
}

}  // namespace prodstruct

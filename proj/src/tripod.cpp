#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/planar.h"
#include "tripod_engine.h"

namespace prodstruct {

BfsResult bfs_layering(const Graph& g, int root) {
  if (root < 0 || root >= g.n()) throw MalformedInput("bfs root out of range");
  BfsResult r;
  r.dist = bfs_distances(g, root);
  for (int d : r.dist)
    if (d < 0) throw StructureError("graph is disconnected; process components separately");
  r.parent.assign(g.n(), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (v == root) continue;
    for (int u : g.neighbours(v))
      if (r.dist[u] == r.dist[v] - 1) {
        r.parent[v] = u;  // neighbours are sorted: lowest id first
        break;
      }
  }
  r.layering = Layering::from_layer_of(r.dist);
  return r;
}

namespace detail {

namespace {

struct Call {
  std::vector<int> cycle;  ///< darts with the region on the left
  int parent_node;
};

}  // namespace

TripodOutput run_tripod(const TripodInput& in) {
  const PlaneGraph& g = *in.gp;
  const int n = g.n();
  const int ne = g.num_edges();
  FaceSet fs = g.faces();
  const int nf = fs.size();
  TripodOutput out;

  const auto& od = fs.darts[fs.face_of_dart[in.outer_dart]];
  if (od.size() != 3) throw StructureError("outer face is not a triangle");
  for (int i = 0; i < 3; ++i) out.outer[i] = g.tail(od[i]);
  for (int d : od)
    if (in.kite[PlaneGraph::edge_of(d)][0] >= 0)
      throw StructureError("condition 4a violated: an edge of the outer face is crossed");

  // BFS from a virtual root adjacent to the outer triangle
  Graph sg = g.simple_graph();
  std::map<std::pair<int, int>, int> edge_id;
  for (int e = 0; e < ne; ++e)
    if (g.edge_alive(e)) edge_id[std::minmax(g.ends(e)[0], g.ends(e)[1])] = e;
  out.dist.assign(n, -1);
  out.parent.assign(n, -1);
  std::deque<int> q;
  for (int v : out.outer) {
    out.dist[v] = 1;
    q.push_back(v);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int w : sg.neighbours(u))
      if (out.dist[w] < 0) {
        out.dist[w] = out.dist[u] + 1;
        q.push_back(w);
      }
  }
  for (int v = 0; v < n; ++v) {
    if (out.dist[v] < 0) throw StructureError("triangulation is disconnected");
    if (out.dist[v] == 1) continue;
    for (int u : sg.neighbours(v))
      if (out.dist[u] == out.dist[v] - 1) {
        out.parent[v] = u;
        break;
      }
  }

  out.part_of.assign(n, -1);
  for (int i = 0; i < 3; ++i) out.part_of[out.outer[i]] = i;
  out.num_parts = 3;
  out.td.bags.push_back({0, 1, 2});
  out.td.root = 0;

  std::vector<int> v_on_f(n, -1), pos_on_f(n, -1), col_stamp(n, -1), col(n, -1), mark(n, -1);
  std::vector<int> e_on_f(ne, -1), e_in_m(ne, -1);
  std::vector<int> f_region(nf, -1), f_comp(nf, -1);

  std::vector<Call> stack;
  stack.push_back({{PlaneGraph::twin(od[2]), PlaneGraph::twin(od[1]), PlaneGraph::twin(od[0])}, 0});
  int stamp = 0;

  while (!stack.empty()) {
    Call call = std::move(stack.back());
    stack.pop_back();
    ++stamp;
    const auto& cyc = call.cycle;
    const int m = static_cast<int>(cyc.size());
    if (m < 3) throw StructureError("boundary cycle shorter than 3");
    for (int i = 0; i < m; ++i) {
      int v = g.tail(cyc[i]);
      if (v_on_f[v] == stamp) throw StructureError("boundary walk is not a simple cycle");
      v_on_f[v] = stamp;
      pos_on_f[v] = i;
      int e = PlaneGraph::edge_of(cyc[i]);
      e_on_f[e] = stamp;
      if (in.kite[e][0] >= 0) throw StructureError("condition 4a violated: an edge of F is crossed");
    }

    // inner faces of the near-triangulation bounded by F
    std::vector<int> region;
    for (int d : cyc) {
      int f = fs.face_of_dart[d];
      if (f_region[f] != stamp) {
        f_region[f] = stamp;
        region.push_back(f);
      }
    }
    for (std::size_t h = 0; h < region.size(); ++h)
      for (int x : fs.darts[region[h]]) {
        if (e_on_f[PlaneGraph::edge_of(x)] == stamp) continue;
        int f2 = fs.face_of_dart[PlaneGraph::twin(x)];
        if (f_region[f2] != stamp) {
          f_region[f2] = stamp;
          region.push_back(f2);
        }
      }
    std::sort(region.begin(), region.end());
    bool has_interior = false;
    for (int f : region)
      for (int x : fs.darts[f]) {
        if (fs.darts[f].size() != 3) throw StructureError("input is not a triangulation");
        int v = g.tail(x);
        if (v_on_f[v] == stamp) continue;
        if (out.part_of[v] >= 0) throw ConsistencyError("assigned vertex inside an open region");
        has_interior = true;
      }
    if (!has_interior) continue;

    // boundary groups R_1, R_2, R_3
    std::vector<int> lab(m);
    for (int i = 0; i < m; ++i) lab[i] = out.part_of[g.tail(cyc[i])];
    int i0 = -1;
    for (int i = 0; i < m; ++i)
      if (lab[i] != lab[(i + m - 1) % m]) {
        i0 = i;
        break;
      }
    std::vector<std::pair<int, int>> runs;  // (start, length)
    if (i0 < 0) {
      runs.push_back({0, m});
    } else {
      for (int k = 0; k < m; ++k) {
        int i = (i0 + k) % m;
        if (k == 0 || lab[i] != lab[(i + m - 1) % m]) runs.push_back({i, 0});
        ++runs.back().second;
      }
    }
    if (runs.size() > 3)
      throw StructureError("condition 4(b) violated: boundary splits into more than three paths");
    std::vector<int> group(m, -1);
    auto fill = [&](int start, int len, int gid) {
      for (int k = 0; k < len; ++k) group[(start + k) % m] = gid;
    };
    if (runs.size() == 3) {
      for (int r = 0; r < 3; ++r) fill(runs[r].first, runs[r].second, r);
    } else if (runs.size() == 2) {
      int r = runs[1].second > runs[0].second ? 1 : 0;
      int o = 1 - r;
      int a = (runs[r].second + 1) / 2;
      // keep cyclic order: long run first half, second half, other run
      fill(runs[r].first, a, 0);
      fill(runs[r].first + a, runs[r].second - a, 1);
      fill(runs[o].first, runs[o].second, 2);
    } else {
      int p = 0;
      for (int i = 1; i < m; ++i)
        if (g.tail(cyc[i]) < g.tail(cyc[p])) p = i;
      int s1 = (m + 2) / 3, s2 = (m + 1) / 3;
      fill(p, s1, 0);
      fill(p + s1, s2, 1);
      fill(p + s1 + s2, m - s1 - s2, 2);
    }

    // Sperner colouring via BFS-tree paths
    auto colour_of = [&](int v) {
      if (v_on_f[v] == stamp) return group[pos_on_f[v]];
      std::vector<int> path;
      int u = v;
      while (v_on_f[u] != stamp && col_stamp[u] != stamp) {
        path.push_back(u);
        u = out.parent[u];
        if (u < 0) throw StructureError("BFS path leaves the region without meeting its boundary");
      }
      int c = v_on_f[u] == stamp ? group[pos_on_f[u]] : col[u];
      for (int w : path) {
        col_stamp[w] = stamp;
        col[w] = c;
      }
      return c;
    };
    int tau_face = -1;
    for (int f : region) {
      int mask = 0;
      for (int x : fs.darts[f]) mask |= 1 << colour_of(g.tail(x));
      if (mask == 7) {
        tau_face = f;
        break;
      }
    }
    if (tau_face < 0) throw ConsistencyError("no trichromatic face found");

    Tripod tp;
    for (int x : fs.darts[tau_face]) tp.tau[colour_of(g.tail(x))] = g.tail(x);
    std::vector<int> ybar_edges;
    for (int x : fs.darts[tau_face]) ybar_edges.push_back(PlaneGraph::edge_of(x));
    for (int i = 0; i < 3; ++i) {
      int u = tp.tau[i];
      tp.paths[i].push_back(u);
      while (v_on_f[u] != stamp) {
        int p = out.parent[u];
        ybar_edges.push_back(edge_id.at(std::minmax(u, p)));
        u = p;
        tp.paths[i].push_back(u);
      }
      for (int v : tp.paths[i]) {
        if (mark[v] == stamp) throw ConsistencyError("vertical paths of a tripod intersect");
        mark[v] = stamp;
      }
    }

    for (int d : cyc) e_in_m[PlaneGraph::edge_of(d)] = stamp;
    std::vector<int> yplus;
    for (int i = 0; i < 3; ++i) yplus.insert(yplus.end(), tp.paths[i].begin(), tp.paths[i].end());
    for (int e : ybar_edges) {
      e_in_m[e] = stamp;
      if (in.kite[e][0] < 0) continue;
      for (int s = 0; s < 2; ++s) {
        int f = fs.face_of_dart[2 * e + s];
        for (int x : fs.darts[f]) {
          int ex = PlaneGraph::edge_of(x);
          if (ex != e) e_in_m[ex] = stamp;
        }
      }
      for (int s = 0; s < 2; ++s) {
        int x = in.kite[e][s];
        yplus.push_back(x);
        tp.kite_vertices.push_back(x);
      }
    }
    std::sort(yplus.begin(), yplus.end());
    yplus.erase(std::unique(yplus.begin(), yplus.end()), yplus.end());
    std::vector<int> s_part;
    for (int v : yplus) {
      if (v_on_f[v] == stamp) continue;
      if (out.part_of[v] >= 0) throw ConsistencyError("tripod vertex already assigned");
      s_part.push_back(v);
    }
    std::sort(tp.kite_vertices.begin(), tp.kite_vertices.end());
    tp.kite_vertices.erase(std::unique(tp.kite_vertices.begin(), tp.kite_vertices.end()),
                           tp.kite_vertices.end());
    if (!s_part.empty()) {
      tp.part = out.num_parts++;
      for (int v : s_part) out.part_of[v] = tp.part;
    }
    out.tripods.push_back(tp);

    std::vector<int> bag(lab.begin(), lab.end());
    if (tp.part >= 0) bag.push_back(tp.part);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    int node = out.td.num_nodes();
    out.td.bags.push_back(bag);
    out.td.tree_edges.emplace_back(call.parent_node, node);

    // faces of M+ inside F
    for (int f0 : region) {
      if (f_comp[f0] == stamp) continue;
      std::vector<int> comp{f0};
      f_comp[f0] = stamp;
      for (std::size_t h = 0; h < comp.size(); ++h)
        for (int x : fs.darts[comp[h]]) {
          if (e_in_m[PlaneGraph::edge_of(x)] == stamp) continue;
          int f2 = fs.face_of_dart[PlaneGraph::twin(x)];
          if (f_comp[f2] != stamp) {
            f_comp[f2] = stamp;
            comp.push_back(f2);
          }
        }
      bool open = false;
      for (int f : comp)
        for (int x : fs.darts[f])
          if (out.part_of[g.tail(x)] < 0) open = true;
      if (!open) continue;
      std::map<int, int> out_dart;
      int count = 0;
      for (int f : comp)
        for (int x : fs.darts[f])
          if (e_in_m[PlaneGraph::edge_of(x)] == stamp) {
            ++count;
            if (!out_dart.emplace(g.tail(x), x).second)
              throw StructureError("face of M+ has a pinched boundary");
          }
      std::vector<int> child;
      int d = out_dart.begin()->second;
      do {
        child.push_back(d);
        auto it = out_dart.find(g.head(d));
        if (it == out_dart.end()) throw StructureError("face of M+ has an open boundary");
        d = it->second;
      } while (d != child.front() && static_cast<int>(child.size()) <= count);
      if (static_cast<int>(child.size()) != count)
        throw StructureError("face of M+ is not bounded by a single cycle");
      stack.push_back({std::move(child), node});
    }
  }
  for (int v = 0; v < n; ++v)
    if (out.part_of[v] < 0) throw ConsistencyError("vertex left unassigned by the recursion");
  return out;
}

}  // namespace detail

LayeredPartition tripod_partition(const PlaneGraph& input) {
  PlaneGraph tri = input.compacted();
  if (tri.n() < 3 || !tri.is_triangulation())
    throw StructureError("tripod_partition: input is not a simple plane triangulation");
  detail::TripodInput in;
  in.gp = &tri;
  in.kite.assign(tri.num_edges(), {-1, -1});
  in.outer_dart = tri.outer_dart() >= 0 ? tri.outer_dart() : 0;
  detail::TripodOutput o = detail::run_tripod(in);

  LayeredPartition lp;
  lp.g = tri.simple_graph();
  lp.partition = HPartition::from_part_of(o.part_of, o.num_parts);
  lp.h = quotient(lp.g, lp.partition).h;
  lp.td = std::move(o.td);
  std::vector<int> layer(tri.n());
  for (int v = 0; v < tri.n(); ++v) layer[v] = o.dist[v] - 1;
  lp.layering = Layering::from_layer_of(layer);
  lp.bfs_parent = std::move(o.parent);
  lp.tripods = std::move(o.tripods);
  lp.outer = o.outer;
  return lp;
}

}  // namespace prodstruct

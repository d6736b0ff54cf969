#include <algorithm>
#include <map>
#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/planar.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

namespace {

void check_map(const MapInstance& m, const FaceSet& fs) {
  if (m.genus != 0) throw MalformedInput("only plane map instances are supported (genus 0)");
  if (!m.g0.euler_ok()) throw EmbeddingError("map rotation system is not planar");
  if (static_cast<int>(m.face_kind.size()) != fs.size())
    throw MalformedInput("face labels do not match the faces of G0");
}

// distinct nation indices around each vertex
std::vector<std::set<int>> nations_around(const MapInstance& m, const FaceSet& fs,
                                          const std::vector<int>& nation_index) {
  std::vector<std::set<int>> at(m.g0.n());
  for (int f = 0; f < fs.size(); ++f)
    if (nation_index[f] >= 0)
      for (int d : fs.darts[f]) at[m.g0.tail(d)].insert(nation_index[f]);
  return at;
}

std::vector<int> index_nations(const MapInstance& m, int* count) {
  std::vector<int> idx(m.face_kind.size(), -1);
  int c = 0;
  for (std::size_t f = 0; f < m.face_kind.size(); ++f)
    if (m.face_kind[f] == FaceKind::nation) idx[f] = c++;
  *count = c;
  return idx;
}

}  // namespace

std::vector<int> nations_at_vertices(const MapInstance& m) {
  FaceSet fs = m.g0.faces();
  check_map(m, fs);
  int c;
  auto idx = index_nations(m, &c);
  auto at = nations_around(m, fs, idx);
  std::vector<int> out(m.g0.n());
  for (int v = 0; v < m.g0.n(); ++v) out[v] = static_cast<int>(at[v].size());
  return out;
}

MapShortcuts map_shortcuts(const MapInstance& m) {
  FaceSet fs = m.g0.faces();
  check_map(m, fs);
  const int n0 = m.g0.n();
  int nn;
  auto idx = index_nations(m, &nn);
  auto at = nations_around(m, fs, idx);

  std::vector<Edge> edges;
  std::set<Edge> share_edge;
  for (int e = 0; e < m.g0.num_edges(); ++e) {
    if (!m.g0.edge_alive(e)) continue;
    int a = idx[fs.face_of_dart[2 * e]], b = idx[fs.face_of_dart[2 * e + 1]];
    if (a >= 0 && b >= 0 && a != b) share_edge.insert(std::minmax(a, b));
  }
  for (auto [a, b] : share_edge) edges.emplace_back(n0 + a, n0 + b);
  for (int v = 0; v < n0; ++v)
    for (int a : at[v]) edges.emplace_back(v, n0 + a);
  Graph g1(n0 + nn, edges);

  MapShortcuts r;
  r.g1 = planar_embedding(g1);
  for (int a = 0; a < nn; ++a) r.nation_vertices.push_back(n0 + a);
  for (int f = 0; f < fs.size(); ++f)
    if (idx[f] >= 0) r.nation_face.push_back(f);
  r.load_bound_per_vertex.assign(n0 + nn, 0);
  // c(c-3)/2 needs consecutive nations around v to share an edge; a lake or a
  // repeated face between them breaks that, and then every pair may need a path
  std::vector<int> faces_at(n0, 0);
  std::vector<char> plain(n0, 1);
  for (int f = 0; f < fs.size(); ++f) {
    std::set<int> seen;
    for (int d : fs.darts[f]) {
      int v = m.g0.tail(d);
      ++faces_at[v];
      if (idx[f] < 0 || !seen.insert(v).second) plain[v] = 0;
    }
  }
  for (int v = 0; v < n0; ++v) {
    int c = static_cast<int>(at[v].size());
    if (plain[v] && faces_at[v] == c)
      r.load_bound_per_vertex[v] = std::max(0, c * (c - 3) / 2);
    else
      r.load_bound_per_vertex[v] = c * (c - 1) / 2;
  }
  r.shortcuts.base = g1;
  r.shortcuts.declared_k = 2;
  r.shortcuts.declared_d = std::max(0, m.declared_d * (m.declared_d - 3) / 2);
  // one length-2 path per nation pair meeting only at vertices; middle = lowest-id common vertex
  std::set<Edge> done;
  for (int x = 0; x < n0; ++x) {
    std::vector<int> ns(at[x].begin(), at[x].end());
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        Edge p{ns[i], ns[j]};
        if (share_edge.count(p) || done.count(p)) continue;
        done.insert(p);
        r.shortcuts.paths.push_back({n0 + p.first, x, n0 + p.second});
      }
  }
  return r;
}

Graph map_graph_oracle(const MapInstance& m) {
  FaceSet fs = m.g0.faces();
  check_map(m, fs);
  std::vector<std::vector<int>> verts;
  for (int f = 0; f < fs.size(); ++f) {
    if (m.face_kind[f] != FaceKind::nation) continue;
    std::vector<int> vs;
    for (int d : fs.darts[f]) vs.push_back(m.g0.tail(d));
    std::sort(vs.begin(), vs.end());
    verts.push_back(vs);
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(), verts[b].end(),
                            std::back_inserter(common));
      if (!common.empty()) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return Graph(static_cast<int>(verts.size()), edges);
}

// ---------------------------------------------------------------------------

namespace {

struct Hit {
  int seg;
  Rational t;
  int point;
};

}  // namespace

StringShortcuts string_shortcuts(const std::vector<Polyline>& curves, int delta) {
  const int nc = static_cast<int>(curves.size());
  for (const auto& c : curves) {
    if (c.size() < 2) throw MalformedInput("a curve needs at least two points");
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] == c[i - 1]) throw MalformedInput("curve has a zero-length segment");
  }
  std::map<Point, std::vector<int>> curves_at;
  struct Raw {
    int curve, seg;
    Rational t;
    Point p;
  };
  std::vector<Raw> raw;
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b)
      for (std::size_t i = 0; i + 1 < curves[a].size(); ++i)
        for (std::size_t j = 0; j + 1 < curves[b].size(); ++j) {
          Rational ta, tb;
          Point at;
          SegHit h = intersect_segments(curves[a][i], curves[a][i + 1], curves[b][j],
                                        curves[b][j + 1], &ta, &tb, &at);
          if (h == SegHit::none) continue;
          if (h != SegHit::proper)
            throw GeometryError("curves " + std::to_string(a) + " and " + std::to_string(b) +
                                " touch without crossing transversally");
          raw.push_back({a, static_cast<int>(i), ta, at});
          raw.push_back({b, static_cast<int>(j), tb, at});
          curves_at[at].push_back(a);
          curves_at[at].push_back(b);
        }
  std::map<Point, int> point_id;
  for (auto& [p, cs] : curves_at) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    if (cs.size() > 2) throw GeometryError("three or more curves meet at one point");
    int id = static_cast<int>(point_id.size());
    point_id[p] = id;
  }
  const int np = static_cast<int>(point_id.size());

  StringShortcuts r;
  std::vector<std::vector<Hit>> hits(nc);
  for (auto& h : raw) hits[h.curve].push_back({h.seg, h.t, point_id.at(h.p)});
  std::vector<std::vector<int>> seq(nc);  // vertex sequence along each curve
  std::vector<Edge> edges;
  std::vector<std::set<int>> meets(nc);
  for (int c = 0; c < nc; ++c) {
    auto& hs = hits[c];
    std::sort(hs.begin(), hs.end(), [](const Hit& x, const Hit& y) {
      return x.seg < y.seg || (x.seg == y.seg && x.t < y.t);
    });
    int k = static_cast<int>(hs.size());
    r.intersections_on.push_back(k);
    r.representative.push_back(np + c);
    for (int i = 0; i < k; ++i) {
      if (i == k / 2) seq[c].push_back(np + c);
      seq[c].push_back(hs[i].point);
    }
    if (k == 0) seq[c].push_back(np + c);
    for (std::size_t i = 1; i < seq[c].size(); ++i) edges.emplace_back(seq[c][i - 1], seq[c][i]);
  }
  for (auto& [p, cs] : curves_at) {
    meets[cs[0]].insert(cs[1]);
    meets[cs[1]].insert(cs[0]);
  }
  // delta bounds the intersection points on a curve, repeats included
  int measured = 0;
  for (int k : r.intersections_on) measured = std::max(measured, k);
  if (delta < 0) delta = measured;
  if (measured > delta)
    throw MalformedInput("a curve is in more than delta intersections");
  r.delta = delta;
  r.g0 = Graph(np + nc, edges);

  std::vector<std::map<int, int>> pos(nc);
  for (int c = 0; c < nc; ++c)
    for (int i = 0; i < static_cast<int>(seq[c].size()); ++i) pos[c].emplace(seq[c][i], i);
  auto walk = [&](int c, int from, int to, std::vector<int>& out) {
    int a = pos[c].at(from), b = pos[c].at(to);
    int step = a <= b ? 1 : -1;
    for (int i = a; i != b; i += step) out.push_back(seq[c][i]);
  };
  for (int v = 0; v < nc; ++v)
    for (int w : meets[v]) {
      if (w < v) continue;
      // crossing point giving the shortest walk; ties to the lowest point id
      int best = -1, best_len = 0;
      for (auto& [p, cs] : curves_at) {
        if (!(cs[0] == v && cs[1] == w)) continue;
        int x = point_id.at(p);
        int len = std::abs(pos[v].at(np + v) - pos[v].at(x)) + std::abs(pos[w].at(np + w) - pos[w].at(x));
        if (best < 0 || len < best_len || (len == best_len && x < best)) {
          best = x;
          best_len = len;
        }
      }
      std::vector<int> wk;
      walk(v, np + v, best, wk);
      walk(w, best, np + w, wk);
      wk.push_back(np + w);
      // loop-erase: a curve may revisit a vertex through a repeated crossing
      std::vector<int> path;
      std::map<int, int> where;
      for (int x : wk) {
        auto it = where.find(x);
        if (it != where.end()) {
          for (std::size_t i = it->second + 1; i < path.size(); ++i) where.erase(path[i]);
          path.resize(it->second + 1);
        } else {
          where[x] = static_cast<int>(path.size());
          path.push_back(x);
        }
      }
      r.shortcuts.paths.push_back(path);
    }
  r.shortcuts.base = r.g0;
  r.shortcuts.declared_k = delta + 1;
  r.shortcuts.declared_d = delta + 1;
  return r;
}

Graph string_graph_oracle(const std::vector<Polyline>& curves) {
  const int nc = static_cast<int>(curves.size());
  std::vector<Edge> edges;
  for (int a = 0; a < nc; ++a)
    for (int b = a + 1; b < nc; ++b) {
      bool meet = false;
      for (std::size_t i = 0; !meet && i + 1 < curves[a].size(); ++i)
        for (std::size_t j = 0; !meet && j + 1 < curves[b].size(); ++j)
          meet = intersect_segments(curves[a][i], curves[a][i + 1], curves[b][j],
                                    curves[b][j + 1]) != SegHit::none;
      if (meet) edges.emplace_back(a, b);
    }
  return Graph(nc, edges);
}

}  // namespace prodstruct

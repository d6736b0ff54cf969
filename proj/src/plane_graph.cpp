#include "prodstruct/plane_graph.h"

#include <algorithm>
#include <deque>
#include <set>

#include "prodstruct/errors.h"

namespace prodstruct {

PlaneGraph::PlaneGraph(int n) : rot_(n), crossing_(n, 0) {}

PlaneGraph PlaneGraph::from_faces(int n, const std::vector<std::vector<int>>& faces) {
  std::map<std::pair<int, int>, int> dart_of;
  std::vector<Edge> edges;
  std::vector<std::array<int, 2>> ends;
  auto get_dart = [&](int u, int v) {
    auto it = dart_of.find({u, v});
    if (it != dart_of.end()) return it->second;
    auto jt = dart_of.find({v, u});
    if (jt != dart_of.end()) throw MalformedInput("face list: dart traversed twice");
    int e = static_cast<int>(ends.size());
    ends.push_back({u, v});
    dart_of[{u, v}] = 2 * e;
    dart_of[{v, u}] = 2 * e + 1;
    return 2 * e;
  };
  // succ[d] = ccw successor of dart d around its tail
  std::map<int, int> succ;
  std::set<std::pair<int, int>> used;
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    if (k < 2) throw MalformedInput("face list: face with fewer than 2 vertices");
    for (int i = 0; i < k; ++i) {
      int a = f[i], b = f[(i + 1) % k], c = f[(i + 2) % k];
      if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
        throw MalformedInput("face list: vertex out of range");
      if (!used.insert({a, b}).second) throw MalformedInput("face list: dart traversed twice");
      int out_bc = get_dart(b, c);
      int out_ba = get_dart(b, a);
      succ[out_bc] = out_ba;
    }
  }
  for (const auto& [uv, d] : dart_of)
    if (!used.count(uv)) throw MalformedInput("face list: edge traversed in one direction only");
  std::vector<std::vector<int>> rot(n);
  std::vector<char> done(2 * ends.size(), 0);
  for (const auto& [d0, s] : succ) {
    (void)s;
    if (done[d0]) continue;
    int tail = ends[d0 >> 1][d0 & 1];
    if (!rot[tail].empty()) throw MalformedInput("face list: rotation at a vertex is not a single cycle");
    int d = d0;
    do {
      done[d] = 1;
      rot[tail].push_back(d);
      d = succ.at(d);
    } while (d != d0);
  }
  for (const auto& e : ends) edges.emplace_back(e[0], e[1]);
  PlaneGraph g = from_rotation(n, edges, rot);
  return g;
}

PlaneGraph PlaneGraph::from_rotation(int n, const std::vector<Edge>& edges,
                                     const std::vector<std::vector<int>>& rotation) {
  PlaneGraph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedInput("edge endpoint out of range");
    if (u == v) throw MalformedInput("self-loop in plane graph");
    g.ends_.push_back({u, v});
    g.alive_.push_back(1);
  }
  if (static_cast<int>(rotation.size()) != n) throw MalformedInput("rotation size mismatch");
  g.pos_.assign(2 * edges.size(), -1);
  for (int v = 0; v < n; ++v) {
    g.rot_[v] = rotation[v];
    for (int d : rotation[v]) {
      if (d < 0 || d >= static_cast<int>(g.pos_.size()) || g.tail(d) != v)
        throw MalformedInput("rotation lists a dart not leaving its vertex");
      if (g.pos_[d] != -1) throw MalformedInput("dart listed twice in rotation");
    }
    g.reindex(v);
  }
  for (std::size_t d = 0; d < g.pos_.size(); ++d)
    if (g.pos_[d] == -1) throw MalformedInput("dart missing from rotation");
  return g;
}

int PlaneGraph::num_live_edges() const {
  return static_cast<int>(std::count(alive_.begin(), alive_.end(), 1));
}

void PlaneGraph::reindex(int v) {
  for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) pos_[rot_[v][i]] = i;
}

int PlaneGraph::ccw_next(int d) const {
  const auto& r = rot_[tail(d)];
  return r[(pos_[d] + 1) % r.size()];
}

int PlaneGraph::ccw_prev(int d) const {
  const auto& r = rot_[tail(d)];
  return r[(pos_[d] + r.size() - 1) % r.size()];
}

int PlaneGraph::add_vertex() {
  rot_.emplace_back();
  crossing_.push_back(0);
  return n() - 1;
}

int PlaneGraph::add_edge(int du, int dv, int u, int v) {
  if (du >= 0) u = tail(du);
  if (dv >= 0) v = tail(dv);
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw MalformedInput("add_edge: bad endpoint");
  if (u == v) throw StructureError("add_edge: self-loop");
  if ((du < 0 && !rot_[u].empty()) || (dv < 0 && !rot_[v].empty()))
    throw StructureError("add_edge: corner required at non-isolated vertex");
  int e = num_edges();
  ends_.push_back({u, v});
  alive_.push_back(1);
  pos_.push_back(-1);
  pos_.push_back(-1);
  auto insert = [&](int w, int after, int d) {
    if (after < 0) rot_[w].push_back(d);
    else rot_[w].insert(rot_[w].begin() + pos_[after] + 1, d);
    reindex(w);
  };
  insert(u, du, 2 * e);
  insert(v, dv, 2 * e + 1);
  return e;
}

void PlaneGraph::remove_edge(int e) {
  if (!alive_[e]) return;
  for (int s = 0; s < 2; ++s) {
    int d = 2 * e + s;
    int w = tail(d);
    rot_[w].erase(rot_[w].begin() + pos_[d]);
    pos_[d] = -1;
    reindex(w);
  }
  alive_[e] = 0;
  if (outer_dart_ >= 0 && edge_of(outer_dart_) == e) outer_dart_ = -1;
}

PlaneGraph PlaneGraph::compacted(std::vector<int>* edge_map) const {
  std::vector<int> id(n());
  for (int v = 0; v < n(); ++v) id[v] = v;
  return relabeled(id, n(), edge_map);
}

PlaneGraph PlaneGraph::relabeled(const std::vector<int>& new_of_old, int new_n,
                                 std::vector<int>* edge_map) const {
  std::vector<int> new_id(num_edges(), -1);
  std::vector<Edge> edges;
  for (int e = 0; e < num_edges(); ++e)
    if (alive_[e]) {
      int a = new_of_old[ends_[e][0]], b = new_of_old[ends_[e][1]];
      if (a < 0 || b < 0) throw StructureError("relabeled: dropped vertex is not isolated");
      new_id[e] = static_cast<int>(edges.size());
      edges.emplace_back(a, b);
    }
  std::vector<std::vector<int>> rot(new_n);
  for (int v = 0; v < n(); ++v) {
    if (new_of_old[v] < 0) continue;
    for (int d : rot_[v]) rot[new_of_old[v]].push_back(2 * new_id[edge_of(d)] + (d & 1));
  }
  PlaneGraph g = from_rotation(new_n, edges, rot);
  for (int v = 0; v < n(); ++v)
    if (new_of_old[v] >= 0) {
      g.set_crossing(new_of_old[v], is_crossing(v));
      auto it = labels.find(v);
      if (it != labels.end()) g.labels[new_of_old[v]] = it->second;
    }
  if (outer_dart_ >= 0 && alive_[edge_of(outer_dart_)])
    g.outer_dart_ = 2 * new_id[edge_of(outer_dart_)] + (outer_dart_ & 1);
  if (edge_map) *edge_map = new_id;
  return g;
}

FaceSet PlaneGraph::faces() const {
  FaceSet fs;
  fs.face_of_dart.assign(2 * num_edges(), -1);
  for (int d0 = 0; d0 < 2 * num_edges(); ++d0) {
    if (!alive_[edge_of(d0)] || fs.face_of_dart[d0] != -1) continue;
    int f = fs.size();
    fs.darts.emplace_back();
    int d = d0;
    do {
      fs.face_of_dart[d] = f;
      fs.darts[f].push_back(d);
      d = next_in_face(d);
    } while (d != d0);
  }
  return fs;
}

int PlaneGraph::outer_face() const {
  if (outer_dart_ < 0) return -1;
  return faces().face_of_dart[outer_dart_];
}

void PlaneGraph::set_crossing(int v, bool c) {
  if (v >= static_cast<int>(crossing_.size())) crossing_.resize(n(), 0);
  crossing_[v] = c ? 1 : 0;
}

int PlaneGraph::num_crossings() const {
  return static_cast<int>(std::count(crossing_.begin(), crossing_.end(), 1));
}

Graph PlaneGraph::simple_graph() const {
  std::vector<Edge> es;
  for (int e = 0; e < num_edges(); ++e)
    if (alive_[e]) es.emplace_back(ends_[e][0], ends_[e][1]);
  Graph g(n(), es);
  g.labels = labels;
  return g;
}

bool PlaneGraph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < num_edges(); ++e) {
    if (!alive_[e]) continue;
    auto [u, v] = std::minmax(ends_[e][0], ends_[e][1]);
    if (!seen.insert({u, v}).second) return false;
  }
  return true;
}

bool PlaneGraph::euler_ok() const {
  FaceSet fs = faces();
  Graph g = simple_graph();
  std::vector<int> comp(n(), -1);
  auto comps = connected_components(g);
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int v : comps[c]) comp[v] = c;
  std::vector<long> vc(comps.size(), 0), ec(comps.size(), 0), fc(comps.size(), 0);
  for (int v = 0; v < n(); ++v) ++vc[comp[v]];
  for (int e = 0; e < num_edges(); ++e)
    if (alive_[e]) ++ec[comp[ends_[e][0]]];
  for (const auto& f : fs.darts) ++fc[comp[tail(f[0])]];
  for (std::size_t c = 0; c < comps.size(); ++c) {
    long f = ec[c] == 0 ? 1 : fc[c];
    if (vc[c] - ec[c] + f != 2) return false;
  }
  return true;
}

bool PlaneGraph::is_triangulation() const {
  if (!is_simple() || !euler_ok() || !is_connected(simple_graph())) return false;
  for (const auto& f : faces().darts) {
    if (f.size() != 3) return false;
    int a = tail(f[0]), b = tail(f[1]), c = tail(f[2]);
    if (a == b || b == c || a == c) return false;
  }
  return true;
}

}  // namespace prodstruct

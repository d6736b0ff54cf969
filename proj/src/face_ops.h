#pragma once

#include <set>
#include <utility>
#include <vector>

#include "prodstruct/plane_graph.h"

namespace prodstruct::detail {

/// Unordered adjacency of a multigraph, updated as chords are added.
class PairSet {
 public:
  explicit PairSet(const PlaneGraph& g) {
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.edge_alive(e)) add(g.ends(e)[0], g.ends(e)[1]);
  }
  bool has(int u, int v) const { return s_.count(key(u, v)) > 0; }
  void add(int u, int v) { s_.insert(key(u, v)); }

 private:
  static std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }
  std::set<std::pair<int, int>> s_;
};

/// Adds one chord inside a face walk of length >= 4 so that it splits off a
/// smaller face. Fan from the lowest-id vertex; if that chord already exists
/// the alternative diagonal is tried, then any valid chord. When
/// allow_parallel is set, a chord duplicating an edge elsewhere is accepted
/// as a last resort. Returns false if no chord could be placed.
inline bool add_face_chord(PlaneGraph& g, const std::vector<int>& walk, PairSet& adj,
                           bool allow_parallel) {
  const int L = static_cast<int>(walk.size());
  auto w = [&](int i) { return g.tail(walk[((i % L) + L) % L]); };
  auto dart = [&](int i) { return walk[((i % L) + L) % L]; };
  int s = 0;
  for (int i = 1; i < L; ++i)
    if (w(i) < w(s)) s = i;
  auto ok = [&](int i, int j, bool par) {
    int a = w(i), b = w(j);
    return a != b && (par || !adj.has(a, b));
  };
  auto place = [&](int i, int j) {
    g.add_edge(dart(i), dart(j));
    adj.add(w(i), w(j));
    return true;
  };
  if (ok(s, s + 2, false)) return place(s, s + 2);
  if (ok(s + 1, s + 3, false)) return place(s + 1, s + 3);
  for (int pass = 0; pass < (allow_parallel ? 2 : 1); ++pass) {
    bool par = pass == 1;
    for (int i = 0; i < L; ++i)
      if (ok(s + i, s + i + 2, par)) return place(s + i, s + i + 2);
    for (int gap = 3; gap <= L - 2; ++gap)
      for (int i = 0; i < L; ++i)
        if (ok(s + i, s + i + gap, par)) return place(s + i, s + i + gap);
  }
  return false;
}

}  // namespace prodstruct::detail

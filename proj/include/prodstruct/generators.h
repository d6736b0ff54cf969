#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prodstruct/graph.h"
#include "prodstruct/planar.h"
#include "prodstruct/plane_graph.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

/// mt19937_64 with its own bounded-int and shuffle so that instances are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  /// Uniform in [0, n). n > 0.
  std::uint64_t below(std::uint64_t n);
  int uniform(int lo, int hi);  ///< inclusive
  bool coin(double p);
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 eng_;
};

/// Random plane triangulation: vertices inserted into random inner faces,
/// then random legal flips. Outer face is 0,1,2.
PlaneGraph random_triangulation(int n, std::uint64_t seed);

/// rows x cols grid quadrangulation; each face gets both diagonals (a
/// crossing vertex) with probability p_cross.
PlaneGraph random_one_plane(int rows, int cols, double p_cross, std::uint64_t seed);

/// Straight-line drawing on integer points with at most k crossings per
/// edge, in general position.
Drawing random_kplane_drawing(int n, int k, std::uint64_t seed);

/// Distinct integer points in [0, range)^2.
std::vector<Point> random_points(int n, std::uint64_t seed, int range = 1000000);

/// Triangulation with some edges removed; lakes only on faces whose
/// vertices all have degree below the maximum. declared_d = max degree.
MapInstance random_map(int n, std::uint64_t seed);

/// Polylines with 2..4 points; only proper pairwise crossings.
std::vector<Polyline> random_curves(int count, std::uint64_t seed);

/// G(n, p) style graph with about avg_deg * n / 2 edges.
Graph random_graph(int n, double avg_deg, std::uint64_t seed);

/// Random simple paths of length 1..k in g with internal load at most d.
ShortcutSystem random_shortcuts(const Graph& g, int k, int d, int count, std::uint64_t seed);

}  // namespace prodstruct

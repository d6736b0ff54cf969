#pragma once

#include <array>
#include <optional>
#include <vector>

#include "prodstruct/geometry.h"
#include "prodstruct/graph.h"
#include "prodstruct/plane_graph.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

/// Straight-line drawing with exact rational coordinates.
struct Drawing {
  std::vector<Point> points;
  std::vector<Edge> edges;
};

struct Planarization {
  PlaneGraph g0;
  ShortcutSystem shortcuts;            ///< over g0.simple_graph()
  std::vector<int> original_vertices;  ///< 0..n-1 of the drawing
  std::vector<int> crossings_on_edge;  ///< per drawing edge (deduplicated order)
  int max_crossings_per_edge = 0;
};

/// Plane graph whose rotation is read off straight-line positions. The
/// outer dart is set at the lexicographically smallest vertex.
PlaneGraph plane_graph_from_positions(int n, const std::vector<Edge>& edges,
                                      const std::vector<Point>& pos);

/// Replaces each crossing by a degree-4 dummy. Throws GeometryError on
/// degenerate input.
Planarization planarize(const Drawing& d);

/// Simple plane triangulation supergraph. Disconnected inputs are first
/// joined by edges between components.
PlaneGraph triangulate(const PlaneGraph& g);

struct BfsResult {
  Layering layering;
  std::vector<int> parent;  ///< -1 at the root
  std::vector<int> dist;
};

/// Parent = lowest-id neighbour in the previous layer. Throws StructureError
/// when g is disconnected.
BfsResult bfs_layering(const Graph& g, int root);

struct Tripod {
  int part = -1;                      ///< -1 when the tripod added no new vertex
  std::array<int, 3> tau{};
  std::array<std::vector<int>, 3> paths;  ///< Q_i from tau[i] to the boundary
  std::vector<int> kite_vertices;     ///< extra vertices from crossed kites
};

struct LayeredPartition {
  Graph g;                 ///< the partitioned graph
  HPartition partition;
  Graph h;                 ///< quotient (part ids == vertex ids of h)
  TreeDecomposition td;    ///< of h; mirrors the face recursion
  Layering layering;       ///< BFS layering from the root outside the outer face
  std::vector<int> bfs_parent;
  std::vector<Tripod> tripods;
  std::array<int, 3> outer{};
};

/// Tripod H-partition of a simple plane triangulation (n >= 3). The root is
/// placed in the outer face (tri.outer_dart(), else face 0).
LayeredPartition tripod_partition(const PlaneGraph& tri);

/// Adds edges so every pair of co-facial real vertices is adjacent along
/// that face; uncrosses adjacent-edge crossings; completes kites.
PlaneGraph edge_maximalize_1plane(const PlaneGraph& g);

struct OnePlanarResult {
  LayeredPartition lp;        ///< over the real vertices, g includes both spars
  Layering paired;            ///< L'_i = L_{2i} ∪ L_{2i+1}
  PlaneGraph g_prime;         ///< spar-removed triangulation on real vertices
  std::vector<int> real_of;   ///< planarization vertex -> real id (-1 for dummies)
  int num_kites = 0;
};

OnePlanarResult one_planar_partition(const PlaneGraph& maximal);

/// Boyer–Myrvold planarity test.
bool is_planar(const Graph& g);
/// A planar embedding as a PlaneGraph; throws EmbeddingError if nonplanar.
PlaneGraph planar_embedding(const Graph& g);

}  // namespace prodstruct

#pragma once

#include <map>
#include <string>
#include <vector>

#include "prodstruct/exec.h"
#include "prodstruct/geometry.h"
#include "prodstruct/graph.h"
#include "prodstruct/plane_graph.h"

namespace prodstruct {

/// Paths over a base graph. A path of length >= 1 is a vertex sequence.
struct ShortcutSystem {
  Graph base;
  std::vector<std::vector<int>> paths;
  int declared_k = 0;
  int declared_d = 0;
};

struct ShortcutValidation {
  int k_actual = 0;
  int d_actual = 0;
  std::vector<int> internal_load;   ///< per vertex
  std::vector<int> violations;      ///< indices of paths that are not base paths
  bool within_declared = false;     ///< k_actual <= declared_k and d_actual <= declared_d
};

ShortcutValidation validate_shortcuts(const ShortcutSystem& s);

/// G^P: base plus an edge between the ends of every path.
Graph apply_shortcuts(const ShortcutSystem& s);

/// The system augmented with a length-1 path for each base edge not
/// already present as a length-1 path.
ShortcutSystem with_edge_shortcuts(const ShortcutSystem& s);

/// One BFS shortest path (lowest-id parent) per pair at distance 1..k.
ShortcutSystem power_shortcuts(const Graph& g, int k, Exec exec = Exec::parallel);
/// Brute-force k-th power by all-pairs BFS.
Graph graph_power(const Graph& g, int k);

// ---------------------------------------------------------------------------
// map graphs

enum class FaceKind { nation, lake };

struct MapInstance {
  PlaneGraph g0;
  std::vector<FaceKind> face_kind;  ///< indexed by g0.faces() id
  int declared_d = 0;
  int genus = 0;
};

struct MapShortcuts {
  PlaneGraph g1;
  ShortcutSystem shortcuts;               ///< over g1
  std::vector<int> nation_vertices;       ///< g1 vertex per nation, in face-id order
  std::vector<int> nation_face;           ///< face id per nation vertex index
  std::vector<int> load_bound_per_vertex; ///< d(d-3)/2 evaluated at the vertex's nation count
};

MapShortcuts map_shortcuts(const MapInstance& m);
/// Nations (as nation indices) adjacent iff their faces share a G0 vertex.
Graph map_graph_oracle(const MapInstance& m);
/// Number of nations incident with each vertex.
std::vector<int> nations_at_vertices(const MapInstance& m);

// ---------------------------------------------------------------------------
// string graphs

using Polyline = std::vector<Point>;

struct StringShortcuts {
  Graph g0;
  ShortcutSystem shortcuts;
  std::vector<int> representative;   ///< g0 vertex per curve
  std::vector<int> intersections_on; ///< intersection points per curve
  int delta = 0;
};

/// delta < 0 means "use the measured maximum".
StringShortcuts string_shortcuts(const std::vector<Polyline>& curves, int delta = -1);
/// Curves i, j adjacent iff some pair of their segments intersect.
Graph string_graph_oracle(const std::vector<Polyline>& curves);

// ---------------------------------------------------------------------------
// k-nearest-neighbour graphs

struct GeometricGraph {
  std::vector<Point> points;
  Graph g;
};

GeometricGraph knn_build(const std::vector<Point>& points, int k);

struct KnnStats {
  int max_crossings = 0;
  int max_degree = 0;
  long total_crossings = 0;
  bool bound_ok = false;
  std::vector<int> crossings_per_edge;  ///< indexed like g.edges()
};

KnnStats knn_crossing_stats(const GeometricGraph& gg, int k, Exec exec = Exec::parallel);
/// Proper crossings per edge of a straight-line drawing.
std::vector<int> count_crossings(const std::vector<Point>& pts, const std::vector<Edge>& edges,
                                 Exec exec = Exec::parallel);

}  // namespace prodstruct

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "prodstruct/graph.h"

namespace prodstruct {

/// Faces of a rotation system. A dart's face is the one on its left.
struct FaceSet {
  std::vector<int> face_of_dart;
  std::vector<std::vector<int>> darts;  ///< boundary walk of each face
  int size() const { return static_cast<int>(darts.size()); }
};

/// Combinatorial embedded multigraph. Edge e has darts 2e (tail = end 0)
/// and 2e+1 (tail = end 1). rotation(v) lists the darts leaving v in
/// counter-clockwise order. Faces are traced with the face on the left:
/// next(u->v) is the dart leaving v just clockwise of v->u.
///
/// Crossing vertices (dummies) have degree 4; the darts at positions i and
/// i+2 of their rotation belong to the same original edge.
class PlaneGraph {
 public:
  PlaneGraph() = default;
  explicit PlaneGraph(int n);

  /// Builds a simple plane graph from its face cycles (each listed with the
  /// face on the left, i.e. bounded faces counter-clockwise). Every edge
  /// must be traversed exactly once in each direction.
  static PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& faces);

  /// Builds from explicit edges and per-vertex dart rotations.
  static PlaneGraph from_rotation(int n, const std::vector<Edge>& edges,
                                  const std::vector<std::vector<int>>& rotation);

  int n() const { return static_cast<int>(rot_.size()); }
  int num_edges() const { return static_cast<int>(ends_.size()); }
  int num_live_edges() const;
  bool edge_alive(int e) const { return alive_[e]; }

  static int dart(int e, int side) { return 2 * e + side; }
  static int edge_of(int d) { return d >> 1; }
  static int twin(int d) { return d ^ 1; }
  int tail(int d) const { return ends_[d >> 1][d & 1]; }
  int head(int d) const { return ends_[d >> 1][(d & 1) ^ 1]; }
  const std::array<int, 2>& ends(int e) const { return ends_[e]; }

  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  int position(int d) const { return pos_[d]; }
  int ccw_next(int d) const;
  int ccw_prev(int d) const;
  int next_in_face(int d) const { return ccw_prev(twin(d)); }

  int add_vertex();
  /// Adds edge tail(du)–tail(dv); the new darts are placed immediately
  /// counter-clockwise after du and dv. If du (dv) is -1 the endpoint must
  /// be isolated. Returns the new edge id.
  int add_edge(int du, int dv, int u = -1, int v = -1);
  /// Removes an edge from the rotation; ids of other edges are unchanged.
  void remove_edge(int e);
  /// Copy with dead edges dropped and edges renumbered in id order.
  /// edge_map (optional) receives old edge id -> new id (-1 if dropped).
  PlaneGraph compacted(std::vector<int>* edge_map = nullptr) const;
  /// Copy with vertices renumbered; new_of_old[v] == -1 drops v, which must
  /// be isolated. Dead edges are dropped as in compacted().
  PlaneGraph relabeled(const std::vector<int>& new_of_old, int new_n,
                       std::vector<int>* edge_map = nullptr) const;

  FaceSet faces() const;
  /// Face id of the outer face under faces() numbering; -1 if unset.
  int outer_face() const;
  int outer_dart() const { return outer_dart_; }
  void set_outer_dart(int d) { outer_dart_ = d; }

  bool is_crossing(int v) const { return v < static_cast<int>(crossing_.size()) && crossing_[v]; }
  void set_crossing(int v, bool c);
  int num_crossings() const;

  /// Underlying simple graph (parallel edges merged).
  Graph simple_graph() const;
  bool is_simple() const;
  /// Euler's formula per connected component.
  bool euler_ok() const;
  /// Every face is a triangle on three distinct vertices and the graph is simple.
  bool is_triangulation() const;

  std::map<int, std::string> labels;

 private:
  void reindex(int v);

  std::vector<std::array<int, 2>> ends_;
  std::vector<char> alive_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> pos_;
  std::vector<char> crossing_;
  int outer_dart_ = -1;
};

}  // namespace prodstruct

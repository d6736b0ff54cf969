#pragma once

#include <string>
#include <vector>

#include "prodstruct/exec.h"
#include "prodstruct/graph.h"
#include "prodstruct/planar.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

/// Rooted tree decomposition of H whose nodes are the vertices of H.
struct NormalizedDecomposition {
  int root = -1;
  std::vector<int> parent;  ///< -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> bags;  ///< sorted
  std::vector<int> depth;
  std::vector<int> tin, tout;  ///< Euler-tour interval per node

  int size() const { return static_cast<int>(parent.size()); }
  /// a is an ancestor of x (every node is its own ancestor).
  bool is_ancestor(int a, int x) const { return tin[a] <= tin[x] && tout[x] <= tout[a]; }
  int width() const;
  TreeDecomposition as_td() const;
};

/// Throws MalformedInput if td is not a valid decomposition of h.
NormalizedDecomposition normalize(const Graph& h, const TreeDecomposition& td);

/// Violations of validity, T1 and T2 (empty when normalized).
std::vector<std::string> check_normalized(const Graph& h, const NormalizedDecomposition& nd);

struct HierarchySets {
  std::vector<std::vector<int>> v_sets;     ///< V_x
  std::vector<std::vector<int>> f_sets;     ///< F_x
  std::vector<std::vector<int>> witnesses;  ///< strict ancestors covering F_x
  int max_witnesses = 0;
};

/// Builds V_x, F_x and checks Y1-Y5; throws ConsistencyError on a violation.
HierarchySets hierarchy(const Graph& g, const HPartition& p, const NormalizedDecomposition& nd);

/// a(v) for every vertex, over the system augmented with its edges.
std::vector<int> anchors(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                         const NormalizedDecomposition& nd, Exec exec = Exec::parallel);

struct LiftOptions {
  int grouping = 0;  ///< coarse layering factor; 0 means k
  const std::vector<bool>* count_only = nullptr;
  Exec exec = Exec::parallel;
};

struct LiftResult {
  Graph gp;                        ///< G^P
  std::vector<int> anchor;         ///< a(v), a node of T
  HPartition s_partition;          ///< indexed by node of T; empty parts allowed
  Graph j;                         ///< quotient of G^P; vertex i is node node_of_j[i]
  std::vector<int> node_of_j;
  std::vector<int> j_of_node;      ///< -1 when S_x is empty
  TreeDecomposition c;             ///< of j, on the tree T (bags hold j vertices)
  Layering coarse;
  int grouping = 1;

  int k = 0, d = 0, d_used = 1, ell = 0, t = 0;
  int fine_width = 0, coarse_width = 0, max_bag = 0;
  long long fine_cap = 0, coarse_cap = 0, bag_cap = 0;

  bool claim_s_subset = true;
  bool claim_i_ancestor = true;
  bool fine_width_ok = true;
  bool coarse_width_ok = true;
  bool bag_size_ok = true;
  bool c_valid = true;
  bool coarse_layering_ok = true;
  bool product_ok = true;
  std::vector<std::string> failures;

  bool all_ok() const {
    return claim_s_subset && claim_i_ancestor && fine_width_ok && coarse_width_ok &&
           bag_size_ok && c_valid && coarse_layering_ok && product_ok;
  }
};

/// Lifts an H-partition of g (layered by l) through a shortcut system.
LiftResult lift_partition(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                          const Layering& l, const NormalizedDecomposition& nd,
                          const LiftOptions& opt = {});

long long binom(int n, int r);

struct KPlanarResult {
  Planarization pz;
  LayeredPartition lp;  ///< tripod partition of the triangulated planarization
  NormalizedDecomposition nd;
  LiftResult lift;
  int k = 0;
  int measured_crossings = 0;
  int restricted_width = 0;  ///< coarse width counting original vertices only
  long long restricted_cap = 0;
  long long bag_cap = 0;
  bool drawing_covered = true;  ///< every drawing edge is an edge of G^P
  bool ok() const {
    return lift.all_ok() && drawing_covered && restricted_width <= restricted_cap &&
           lift.max_bag <= bag_cap;
  }
};

/// planarize -> triangulate -> tripod_partition -> lift_partition with
/// grouping factor k+1. Throws MalformedInput if the drawing is not k-plane.
KPlanarResult kplanar_pipeline(const Drawing& d, int k, Exec exec = Exec::parallel);

}  // namespace prodstruct

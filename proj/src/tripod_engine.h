#pragma once

#include <array>
#include <vector>

#include "prodstruct/graph.h"
#include "prodstruct/plane_graph.h"
#include "prodstruct/planar.h"

namespace prodstruct::detail {

struct TripodInput {
  const PlaneGraph* gp = nullptr;  ///< simple plane triangulation
  /// per edge of gp: endpoints of the removed spar crossing it, or {-1,-1}
  std::vector<std::array<int, 2>> kite;
  int outer_dart = -1;  ///< dart with the outer face on its left
};

struct TripodOutput {
  std::vector<int> part_of;
  int num_parts = 0;
  TreeDecomposition td;
  std::vector<Tripod> tripods;
  std::vector<int> dist;    ///< distance from the virtual root (outer vertices: 1)
  std::vector<int> parent;  ///< BFS parent; -1 for outer vertices
  std::array<int, 3> outer{};
};

TripodOutput run_tripod(const TripodInput& in);

}  // namespace prodstruct::detail

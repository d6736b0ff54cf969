#pragma once

#include <vector>

#include "prodstruct/exec.h"
#include "prodstruct/graph.h"

namespace prodstruct {

enum class TwMode { exact, heuristic };

struct TreewidthResult {
  int width = -1;
  TreeDecomposition td;
  int lower_bound = -1;  ///< equals width in exact mode
  bool exact = false;
};

constexpr int kDefaultExactTwCap = 20;

/// Exact treewidth by dynamic programming over vertex subsets.
/// Throws SizeLimit when g.n() > cap.
TreewidthResult treewidth_exact(const Graph& g, int cap = kDefaultExactTwCap,
                                Exec exec = Exec::parallel);

/// Min-fill elimination (lowest id breaks ties) plus degeneracy lower bound.
TreewidthResult treewidth_heuristic(const Graph& g);

TreewidthResult treewidth(const Graph& g, TwMode mode, int cap = kDefaultExactTwCap);

/// Tree decomposition induced by eliminating vertices in the given order.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

std::vector<int> min_fill_order(const Graph& g);
int degeneracy(const Graph& g);

}  // namespace prodstruct

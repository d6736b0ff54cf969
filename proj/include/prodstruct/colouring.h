#pragma once

#include <array>
#include <string>
#include <vector>

#include "prodstruct/exec.h"
#include "prodstruct/graph.h"

namespace prodstruct {

/// Colour per vertex (non-negative ints).
using Colouring = std::vector<int>;

int num_colours(const Colouring& c);

struct ProductColouring {
  std::vector<std::array<int, 3>> triple;  ///< (alpha 1..ell, beta 0..p, gamma)
  Colouring flat;                          ///< distinct triples numbered in sorted order
  int colours = 0;
  long long cap = 0;  ///< ell * (p+1) * colours(gamma_h)
};

/// Product colouring from an H-partition, a layering and a colouring of H.
/// Throws SizeLimit if some cell holds more than ell vertices.
ProductColouring lift_p_centered(const Graph& g, const HPartition& part, const Layering& l,
                                 int ell, int p, const Colouring& gamma_h);

constexpr int kDefaultChiCap = 12;
constexpr int kDefaultCheckerCap = 18;

enum class ChiMode { exact, heuristic };

struct ChiResult {
  Colouring colouring;
  int colours = 0;
  bool exact = false;
};

/// Greedy (heuristic) or minimum (exact, n <= cap) p-centered colouring.
ChiResult chi_p_small(const Graph& g, int p, ChiMode mode, int cap = kDefaultChiCap);

struct PCenteredCheck {
  bool valid = true;
  std::vector<int> witness;  ///< connected set with <= p colours and no unique colour
};

/// Exhaustive over connected sets by canonical expansion. Throws SizeLimit
/// when n > cap.
PCenteredCheck check_p_centered(const Graph& g, int p, const Colouring& c,
                                int cap = kDefaultCheckerCap, Exec exec = Exec::parallel);
/// Independent oracle: every vertex subset as a bitmask, connectivity tested
/// directly.
PCenteredCheck check_p_centered_subsets(const Graph& g, int p, const Colouring& c,
                                        int cap = kDefaultCheckerCap);

struct NonrepetitiveCheck {
  bool valid = true;
  std::vector<int> witness;  ///< path whose colour sequence is a square
};

NonrepetitiveCheck check_nonrepetitive(const Graph& g, const Colouring& c, int max_half);

struct QueueLayout {
  std::vector<int> order;     ///< vertices in layout order
  std::vector<int> queue_of;  ///< per edge of g.edges()
  int num_queues() const;
};

struct QueueCheck {
  bool valid = true;
  std::array<Edge, 2> witness{};  ///< outer edge, nested edge
};

/// Throws MalformedInput when order is not a permutation or queue_of is not
/// total on the edges.
QueueCheck check_queue_layout(const Graph& g, const QueueLayout& q);
/// Smallest non-nesting queue per edge; default order is BFS order.
QueueLayout greedy_queue_layout(const Graph& g, const std::vector<int>* order = nullptr);

}  // namespace prodstruct

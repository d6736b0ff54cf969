#pragma once

#include <string>
#include <vector>

namespace prodstruct {

enum class BoundClass { kplanar, one_planar, power, shortcut, p_centered, nonrepetitive, knn, draw };

struct BoundParams {
  int k = 1;
  int p = 2;
  int delta = 3;  ///< maximum degree
  int ell = 3;
  int t = 3;
  int d = 2;
  int genus = 0;
  int chi_h = 1;  ///< colours of the p-centered colouring of H
};

struct BoundRow {
  std::string quantity;
  long long value = -1;  ///< -1 when only symbolic
  std::string formula;
};

/// Theoretical caps for a graph class. Throws MalformedInput on bad params.
std::vector<BoundRow> bound_report(BoundClass c, const BoundParams& bp);

BoundClass parse_bound_class(const std::string& s);

}  // namespace prodstruct

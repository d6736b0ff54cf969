#pragma once

#include <string>

#include "prodstruct/graph.h"

namespace prodstruct {

std::string to_dot(const Graph& g);
/// One cluster per non-empty part.
std::string to_dot(const Graph& g, const HPartition& p);
/// Tree nodes with their bags as record labels.
std::string to_dot(const TreeDecomposition& td);

}  // namespace prodstruct

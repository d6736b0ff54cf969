#include "prodstruct/dot.h"

#include <sstream>

namespace prodstruct {

namespace {

void edges_out(std::ostringstream& o, const Graph& g) {
  for (auto [u, v] : g.edges()) o << "  " << u << " -- " << v << ";\n";
}

}  // namespace

std::string to_dot(const Graph& g) {
  std::ostringstream o;
  o << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) {
    o << "  " << v;
    auto it = g.labels.find(v);
    if (it != g.labels.end()) o << " [xlabel=\"" << it->second << "\"]";
    o << ";\n";
  }
  edges_out(o, g);
  o << "}\n";
  return o.str();
}

std::string to_dot(const Graph& g, const HPartition& p) {
  std::ostringstream o;
  o << "graph G {\n";
  for (int x = 0; x < p.num_parts(); ++x) {
    if (p.parts[x].empty()) continue;
    o << "  subgraph cluster_" << x << " {\n    label=\"" << x << "\";\n";
    for (int v : p.parts[x]) o << "    " << v << ";\n";
    o << "  }\n";
  }
  edges_out(o, g);
  o << "}\n";
  return o.str();
}

std::string to_dot(const TreeDecomposition& td) {
  std::ostringstream o;
  o << "graph T {\n  node [shape=record];\n";
  for (int x = 0; x < td.num_nodes(); ++x) {
    o << "  t" << x << " [label=\"" << x;
    for (int v : td.bags[x]) o << "|" << v;
    o << "\"];\n";
  }
  for (auto [a, b] : td.tree_edges) o << "  t" << a << " -- t" << b << ";\n";
  o << "}\n";
  return o.str();
}

}  // namespace prodstruct

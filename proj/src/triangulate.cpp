#include "face_ops.h"
#include "prodstruct/errors.h"
#include "prodstruct/planar.h"

namespace prodstruct {

PlaneGraph triangulate(const PlaneGraph& input) {
  if (input.n() < 3) throw SizeLimit("triangulate needs at least 3 vertices");
  PlaneGraph g = input.compacted();
  if (!g.is_simple()) throw StructureError("triangulate expects a simple plane graph");
  if (!g.euler_ok()) throw EmbeddingError("rotation system is not planar");

  // join components
  auto comps = connected_components(g.simple_graph());
  for (std::size_t c = 1; c < comps.size(); ++c) {
    int u = comps[0][0], v = comps[c][0];
    int du = g.degree(u) ? g.rotation(u).back() : -1;
    int dv = g.degree(v) ? g.rotation(v).back() : -1;
    g.add_edge(du, dv, u, v);
  }

  detail::PairSet adj(g);
  for (;;) {
    FaceSet fs = g.faces();
    int target = -1;
    for (int f = 0; f < fs.size(); ++f)
      if (fs.darts[f].size() > 3) {
        target = f;
        break;
      }
    if (target < 0) break;
    if (!detail::add_face_chord(g, fs.darts[target], adj, false))
      throw StructureError("triangulate: no simple chord available in a face");
  }
  if (g.outer_dart() < 0 && g.num_edges() > 0) g.set_outer_dart(0);
  if (!g.is_triangulation()) throw StructureError("triangulate produced a non-triangulation");
  return g;
}

}  // namespace prodstruct

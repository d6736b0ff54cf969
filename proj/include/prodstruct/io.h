#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "prodstruct/graph.h"
#include "prodstruct/planar.h"
#include "prodstruct/plane_graph.h"
#include "prodstruct/shortcut.h"

namespace prodstruct {

using json = nlohmann::json;

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);
/// Throws MalformedInput with the parser message.
json parse_json(const std::string& text);

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json sets_to_json(const std::vector<std::vector<int>>& sets);
std::vector<std::vector<int>> sets_from_json(const json& j);

json to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const json& j);

json to_json(const Drawing& d);
Drawing drawing_from_json(const json& j);

/// {"n", "edges", "rotation": per vertex [[edge, end], ...], "labels",
/// "outer_dart"}; crossing vertices carry the label "crossing".
json to_json(const PlaneGraph& g);
PlaneGraph plane_graph_from_json(const json& j);

/// Plane graph JSON plus "faces" (face id -> "nation" | "lake"), "d", "genus".
json to_json(const MapInstance& m);
MapInstance map_from_json(const json& j);

json curves_to_json(const std::vector<Polyline>& curves);
std::vector<Polyline> curves_from_json(const json& j);

/// One "x,y" line per point; a header line is skipped if present.
std::string points_to_csv(const std::vector<Point>& pts);
std::vector<Point> points_from_csv(const std::string& text);

json to_json(const ShortcutSystem& s);

json to_json(const Point& p);
Point point_from_json(const json& j);

}  // namespace prodstruct

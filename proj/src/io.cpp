#include "prodstruct/io.h"

#include <fstream>
#include <sstream>

#include "prodstruct/errors.h"

namespace prodstruct {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write " + path);
  out << text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("bad JSON: ") + e.what());
  }
}

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

std::map<int, std::string> labels_from(const json& j) {
  std::map<int, std::string> out;
  if (!j.contains("labels")) return out;
  for (auto& [k, v] : j.at("labels").items()) out[std::stoi(k)] = v.get<std::string>();
  return out;
}

json labels_to(const std::map<int, std::string>& labels) {
  json o = json::object();
  for (auto& [k, v] : labels) o[std::to_string(k)] = v;
  return o;
}

}  // namespace

json to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (!g.labels.empty()) j["labels"] = labels_to(g.labels);
  return j;
}

Graph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    std::vector<Edge> edges;
    for (auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Graph g(j.at("n").get<int>(), edges);
    g.labels = labels_from(j);
    return g;
  });
}

json sets_to_json(const std::vector<std::vector<int>>& sets) { return json(sets); }

std::vector<std::vector<int>> sets_from_json(const json& j) {
  return guarded("set list", [&] { return j.get<std::vector<std::vector<int>>>(); });
}

json to_json(const TreeDecomposition& td) {
  json j;
  j["bags"] = td.bags;
  j["edges"] = json::array();
  for (auto [a, b] : td.tree_edges) j["edges"].push_back({a, b});
  if (td.root >= 0) j["root"] = td.root;
  return j;
}

TreeDecomposition td_from_json(const json& j) {
  return guarded("tree decomposition", [&] {
    TreeDecomposition td;
    td.bags = j.at("bags").get<std::vector<std::vector<int>>>();
    for (auto& e : j.at("edges")) td.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    td.root = j.value("root", -1);
    return td;
  });
}

json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

namespace {
Rational coord(const json& c) {
  if (c.is_number_integer()) return Rational(c.get<long long>());
  if (c.is_string()) return parse_rational(c.get<std::string>());
  throw MalformedInput("coordinate must be an integer or a \"p/q\" string");
}
}  // namespace

Point point_from_json(const json& j) {
  return guarded("point", [&] {
    if (!j.is_array() || j.size() != 2) throw MalformedInput("point must be [x, y]");
    return Point{coord(j[0]), coord(j[1])};
  });
}

json to_json(const Drawing& d) {
  json j;
  j["points"] = json::array();
  for (auto& p : d.points) j["points"].push_back(to_json(p));
  j["edges"] = json::array();
  for (auto [u, v] : d.edges) j["edges"].push_back({u, v});
  return j;
}

Drawing drawing_from_json(const json& j) {
  return guarded("drawing", [&] {
    Drawing d;
    for (auto& p : j.at("points")) d.points.push_back(point_from_json(p));
    int n = static_cast<int>(d.points.size());
    for (auto& e : j.at("edges")) {
      int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw MalformedInput("bad drawing edge");
      d.edges.emplace_back(u, v);
    }
    return d;
  });
}

json to_json(const PlaneGraph& g) {
  PlaneGraph c = g.compacted();
  json j;
  j["n"] = c.n();
  j["edges"] = json::array();
  for (int e = 0; e < c.num_edges(); ++e) j["edges"].push_back({c.ends(e)[0], c.ends(e)[1]});
  j["rotation"] = json::array();
  for (int v = 0; v < c.n(); ++v) {
    json r = json::array();
    for (int d : c.rotation(v)) r.push_back({PlaneGraph::edge_of(d), d & 1});
    j["rotation"].push_back(r);
  }
  auto labels = c.labels;
  for (int v = 0; v < c.n(); ++v)
    if (c.is_crossing(v)) labels[v] = "crossing";
  j["labels"] = labels_to(labels);
  if (c.outer_dart() >= 0) j["outer_dart"] = c.outer_dart();
  return j;
}

PlaneGraph plane_graph_from_json(const json& j) {
  return guarded("plane graph", [&] {
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<std::vector<int>> rot(n);
    const auto& r = j.at("rotation");
    if (static_cast<int>(r.size()) != n) throw MalformedInput("rotation size mismatch");
    for (int v = 0; v < n; ++v)
      for (auto& de : r[v]) {
        int e = de.at(0).get<int>(), end = de.at(1).get<int>();
        if (e < 0 || e >= static_cast<int>(edges.size()) || (end != 0 && end != 1))
          throw MalformedInput("rotation entry out of range");
        rot[v].push_back(PlaneGraph::dart(e, end));
      }
    PlaneGraph g = PlaneGraph::from_rotation(n, edges, rot);
    for (auto& [v, s] : labels_from(j)) {
      if (v < 0 || v >= n) throw MalformedInput("label on missing vertex");
      if (s == "crossing" || s == "dummy") g.set_crossing(v, true);
      else g.labels[v] = s;
    }
    int od = j.value("outer_dart", -1);
    if (od >= 2 * g.num_edges()) throw MalformedInput("outer_dart out of range");
    g.set_outer_dart(od);
    return g;
  });
}

json to_json(const MapInstance& m) {
  json j = to_json(m.g0);
  j["faces"] = json::object();
  for (std::size_t f = 0; f < m.face_kind.size(); ++f)
    j["faces"][std::to_string(f)] = m.face_kind[f] == FaceKind::nation ? "nation" : "lake";
  j["d"] = m.declared_d;
  j["genus"] = m.genus;
  return j;
}

MapInstance map_from_json(const json& j) {
  return guarded("map instance", [&] {
    MapInstance m;
    m.g0 = plane_graph_from_json(j);
    int nf = m.g0.faces().size();
    m.face_kind.assign(nf, FaceKind::lake);
    for (auto& [k, v] : j.at("faces").items()) {
      int f = std::stoi(k);
      if (f < 0 || f >= nf) throw MalformedInput("face label on missing face " + k);
      std::string s = v.get<std::string>();
      if (s == "nation") m.face_kind[f] = FaceKind::nation;
      else if (s != "lake") throw MalformedInput("face label must be nation or lake");
    }
    m.declared_d = j.value("d", 0);
    m.genus = j.value("genus", 0);
    return m;
  });
}

json curves_to_json(const std::vector<Polyline>& curves) {
  json j = json::array();
  for (auto& c : curves) {
    json pts = json::array();
    for (auto& p : c) pts.push_back(to_json(p));
    j.push_back(pts);
  }
  return j;
}

std::vector<Polyline> curves_from_json(const json& j) {
  return guarded("curves", [&] {
    const json& arr = j.is_object() ? j.at("curves") : j;
    std::vector<Polyline> out;
    for (auto& c : arr) {
      Polyline pl;
      for (auto& p : c) pl.push_back(point_from_json(p));
      out.push_back(pl);
    }
    return out;
  });
}

std::string points_to_csv(const std::vector<Point>& pts) {
  std::string s = "x,y\n";
  for (auto& p : pts) s += to_string(p.x) + "," + to_string(p.y) + "\n";
  return s;
}

std::vector<Point> points_from_csv(const std::string& text) {
  std::vector<Point> pts;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw MalformedInput("CSV line without comma: " + line);
    std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
    if (first && xs == "x") {
      first = false;
      continue;
    }
    first = false;
    pts.push_back({parse_rational(xs), parse_rational(ys)});
  }
  return pts;
}

json to_json(const ShortcutSystem& s) {
  json j;
  j["paths"] = s.paths;
  j["k"] = s.declared_k;
  j["d"] = s.declared_d;
  return j;
}

}  // namespace prodstruct

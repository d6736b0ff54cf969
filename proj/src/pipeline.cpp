#include "prodstruct/pipeline.h"

#include <algorithm>

#include "prodstruct/dot.h"
#include "prodstruct/generators.h"

namespace prodstruct {

void PipelineReport::claim(const std::string& name, bool ok, const std::string& why) {
  claims[name] = ok;
  if (!ok) failures.push_back(why.empty() ? name : name + ": " + why);
}

bool PipelineReport::ok() const {
  for (auto& [k, v] : claims.items())
    if (!v.get<bool>()) return false;
  return true;
}

json PipelineReport::to_json() const {
  json j;
  j["pipeline"] = pipeline;
  j["seed"] = seed;
  j["params"] = params;
  j["measured"] = measured;
  j["caps"] = caps;
  j["claims"] = claims;
  j["failures"] = failures;
  if (!artifacts.empty()) j["artifacts"] = artifacts;
  j["pass"] = ok();
  return j;
}

namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageFailure&) {
    throw;
  } catch (const Error& e) {
    throw StageFailure(name, e.what());
  }
}

PipelineReport start(const char* name, const PipelineOptions& o) {
  PipelineReport r;
  r.pipeline = name;
  r.seed = o.seed;
  return r;
}

bool euler_bound(const Graph& h) {
  return h.n() < 3 || static_cast<long long>(h.m()) <= 3LL * h.n() - 6;
}

void exact_tw_claim(PipelineReport& r, const std::string& name, const Graph& g, long long bag_cap,
                    const PipelineOptions& o) {
  if (!o.exact_tw || g.n() > o.exact_tw_cap) return;
  int tw = treewidth_exact(g, o.exact_tw_cap, o.exec).width;
  r.measured[name] = tw;
  r.claim(name + "_le_cap", tw <= bag_cap - 1,
          "exact treewidth " + std::to_string(tw) + " > " + std::to_string(bag_cap - 1));
}

void lift_claims(PipelineReport& r, const LiftResult& lr, const PipelineOptions& o) {
  r.measured["k"] = lr.k;
  r.measured["d"] = lr.d;
  r.measured["ell"] = lr.ell;
  r.measured["t"] = lr.t;
  r.measured["fine_width"] = lr.fine_width;
  r.measured["coarse_width"] = lr.coarse_width;
  r.measured["max_bag"] = lr.max_bag;
  r.measured["j_vertices"] = lr.j.n();
  r.caps["fine_width"] = lr.fine_cap;
  r.caps["coarse_width"] = lr.coarse_cap;
  r.caps["bag"] = lr.bag_cap;
  r.claims["s_subset"] = lr.claim_s_subset;
  r.claims["i_ancestor"] = lr.claim_i_ancestor;
  r.claims["fine_width"] = lr.fine_width_ok;
  r.claims["coarse_width"] = lr.coarse_width_ok;
  r.claims["bag_size"] = lr.bag_size_ok;
  r.claims["c_valid"] = lr.c_valid;
  r.claims["coarse_layering"] = lr.coarse_layering_ok;
  r.claims["product_embedding"] = lr.product_ok;
  for (auto& f : lr.failures) r.failures.push_back(f);
  exact_tw_claim(r, "j_treewidth", lr.j, lr.bag_cap, o);
  r.artifacts["parts"] = lr.s_partition.parts;
  json je = json::array();
  for (auto [a, b] : lr.j.edges()) je.push_back({a, b});
  r.artifacts["j_edges"] = je;
  r.artifacts["bags"] = lr.c.bags;
  r.artifacts["layering"] = lr.coarse.layers;
  r.dot = to_dot(lr.gp, lr.s_partition);
}

void partition_claims(PipelineReport& r, const LayeredPartition& lp, int width_cap) {
  int w = layered_width(lp.partition, lp.layering);
  r.measured["layered_width"] = w;
  r.caps["layered_width"] = width_cap;
  r.claim("layered_width", w <= width_cap, std::to_string(w));
  r.measured["parts"] = lp.h.n();
  r.claim("h_planar", euler_bound(lp.h) && is_planar(lp.h));
  TDValidation tv = validate_tree_decomposition(lp.h, lp.td);
  r.claim("td_valid", tv.valid, tv.violations.empty() ? "" : tv.violations.front());
  r.measured["max_bag"] = lp.td.max_bag();
  r.caps["bag"] = 4;
  r.claim("bag_size", lp.td.max_bag() <= 4, std::to_string(lp.td.max_bag()));
  r.artifacts["parts"] = lp.partition.parts;
  r.artifacts["layering"] = lp.layering.layers;
  r.artifacts["decomposition"] = to_json(lp.td);
  r.dot = to_dot(lp.g, lp.partition);
}

// lift through a planar base when the base graph is planar
void lift_over_planar(PipelineReport& r, const Graph& g, const ShortcutSystem& s,
                      const PipelineOptions& o) {
  if (!is_planar(g)) {
    r.measured["base_planar"] = false;
    return;
  }
  r.measured["base_planar"] = true;
  LayeredPartition lp = stage("planar-base", [&] { return planar_base(g); });
  NormalizedDecomposition nd = stage("normalize", [&] { return normalize(lp.h, lp.td); });
  LiftOptions lo;
  lo.exec = o.exec;
  LiftResult lr = stage("lift", [&] {
    return lift_partition(g, s, lp.partition, lp.layering, nd, lo);
  });
  lift_claims(r, lr, o);
}

}  // namespace

LayeredPartition planar_base(const Graph& g) {
  if (g.n() >= 3) {
    PlaneGraph tri = triangulate(planar_embedding(g));
    return tripod_partition(tri);
  }
  LayeredPartition lp;
  lp.g = g;
  std::vector<int> all;
  for (int v = 0; v < g.n(); ++v) all.push_back(v);
  lp.partition = HPartition::from_parts(g.n(), {all});
  lp.h = Graph(g.n() > 0 ? 1 : 0);
  if (g.n() > 0) {
    lp.td.bags = {{0}};
    lp.td.root = 0;
  }
  lp.layering = Layering::from_layer_of(std::vector<int>(g.n(), 0));
  lp.bfs_parent.assign(g.n(), -1);
  return lp;
}

PipelineReport run_tripod(const PlaneGraph& g, const PipelineOptions& o) {
  PipelineReport r = start("tripod", o);
  r.params["n"] = g.n();
  PlaneGraph tri = g.is_triangulation() ? g : stage("triangulate", [&] { return triangulate(g); });
  LayeredPartition lp = stage("tripod", [&] { return tripod_partition(tri); });
  r.claim("layering_valid", validate_layering(lp.g, lp.layering).empty());
  partition_claims(r, lp, 3);
  exact_tw_claim(r, "h_treewidth", lp.h, 4, o);
  return r;
}

PipelineReport run_kplanar(const Drawing& d, int k, const PipelineOptions& o) {
  PipelineReport r = start("kplanar", o);
  r.params["n"] = d.points.size();
  r.params["m"] = d.edges.size();
  r.params["k"] = k;
  KPlanarResult kr = stage("kplanar", [&] { return kplanar_pipeline(d, k, o.exec); });
  r.measured["crossings_per_edge"] = kr.measured_crossings;
  r.measured["dummies"] = kr.pz.g0.num_crossings();
  ShortcutValidation sv = validate_shortcuts(kr.pz.shortcuts);
  r.claim("planarize_system", sv.violations.empty() && sv.k_actual <= k + 1 && sv.d_actual <= 2,
          "(" + std::to_string(sv.k_actual) + "," + std::to_string(sv.d_actual) + ")");
  r.claim("tripod_width", layered_width(kr.lp.partition, kr.lp.layering) <= 3);
  lift_claims(r, kr.lift, o);
  r.measured["restricted_width"] = kr.restricted_width;
  r.caps["restricted_width"] = kr.restricted_cap;
  r.caps["kplanar_bag"] = kr.bag_cap;
  r.claim("restricted_width", kr.restricted_width <= kr.restricted_cap,
          std::to_string(kr.restricted_width));
  r.claim("kplanar_bag", kr.lift.max_bag <= kr.bag_cap, std::to_string(kr.lift.max_bag));
  r.claim("drawing_covered", kr.drawing_covered);
  return r;
}

PipelineReport run_one_planar(const PlaneGraph& g, const PipelineOptions& o) {
  PipelineReport r = start("one-planar", o);
  r.params["n"] = g.n();
  r.params["crossings"] = g.num_crossings();
  PlaneGraph mx = stage("edge-maximalize", [&] { return edge_maximalize_1plane(g); });
  OnePlanarResult op = stage("one-planar-partition", [&] { return one_planar_partition(mx); });
  const LayeredPartition& lp = op.lp;
  r.measured["kites"] = op.num_kites;
  Graph gp = op.g_prime.simple_graph();
  r.claim("g_prime_triangulation", op.g_prime.is_triangulation());
  r.claim("layering_valid_g_prime", validate_layering(gp, lp.layering).empty());
  r.claim("paired_layering_valid", validate_layering(lp.g, op.paired).empty());
  bool near = true;
  for (auto [u, v] : lp.g.edges()) {
    if (gp.adjacent(u, v)) continue;
    bool two = false;
    for (int w : gp.neighbours(u)) two = two || gp.adjacent(w, v);
    near = near && two;
  }
  r.claim("spar_distance_le_2", near);
  r.claim("h_is_quotient", quotient(lp.g, lp.partition).h == lp.h);
  partition_claims(r, lp, 15);
  int paired = layered_width(lp.partition, op.paired);
  r.measured["paired_width"] = paired;
  r.caps["paired_width"] = 30;
  r.claim("paired_width", paired <= 30, std::to_string(paired));
  exact_tw_claim(r, "h_treewidth", lp.h, 4, o);
  return r;
}

PipelineReport run_shortcut(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                            const Layering& l, const TreeDecomposition* td,
                            const PipelineOptions& o) {
  PipelineReport r = start("shortcut", o);
  r.params["n"] = g.n();
  r.params["paths"] = s.paths.size();
  r.params["declared_k"] = s.declared_k;
  r.params["declared_d"] = s.declared_d;
  ShortcutValidation sv = validate_shortcuts(s);
  r.claim("system_paths", sv.violations.empty());
  if (s.declared_k > 0) r.claim("system_within_declared", sv.within_declared);
  Quotient q = quotient(g, p);
  for (int x = 0; x < p.num_parts(); ++x)
    if (q.vertex_of_part[x] != x) throw StageFailure("shortcut", "base partition has an empty part");
  TreeDecomposition base_td = td ? *td : treewidth_heuristic(q.h).td;
  NormalizedDecomposition nd = stage("normalize", [&] { return normalize(q.h, base_td); });
  r.claim("normalized", check_normalized(q.h, nd).empty());
  try {
    HierarchySets hs = hierarchy(g, p, nd);
    r.measured["max_witnesses"] = hs.max_witnesses;
    r.claim("hierarchy", hs.max_witnesses <= std::max(0, nd.width()));
  } catch (const ConsistencyError& e) {
    r.claim("hierarchy", false, e.what());
  }
  LiftOptions lo;
  lo.exec = o.exec;
  LiftResult lr = stage("lift", [&] { return lift_partition(g, s, p, l, nd, lo); });
  lift_claims(r, lr, o);
  return r;
}

PipelineReport run_power(const Graph& g, int k, const PipelineOptions& o) {
  PipelineReport r = start("power", o);
  r.params["n"] = g.n();
  r.params["k"] = k;
  ShortcutSystem s = stage("power-shortcuts", [&] { return power_shortcuts(g, k, o.exec); });
  r.claim("power_equals_oracle", apply_shortcuts(s) == graph_power(g, k));
  ShortcutValidation sv = validate_shortcuts(s);
  long long delta = g.max_degree();
  long long cap = 2LL * k;
  for (int i = 0; i < k && cap <= (1LL << 40); ++i) cap *= std::max<long long>(delta, 1);
  if (delta == 0) cap = 0;
  r.measured["k_actual"] = sv.k_actual;
  r.measured["load"] = sv.d_actual;
  r.caps["load"] = cap;
  r.claim("path_length", sv.k_actual <= k);
  r.claim("load", sv.d_actual <= cap, std::to_string(sv.d_actual));
  lift_over_planar(r, g, s, o);
  return r;
}

PipelineReport run_map(const MapInstance& m, const PipelineOptions& o) {
  PipelineReport r = start("map", o);
  r.params["n"] = m.g0.n();
  r.params["d"] = m.declared_d;
  MapShortcuts ms = stage("map-shortcuts", [&] { return map_shortcuts(m); });
  auto at = nations_at_vertices(m);
  int dmax = at.empty() ? 0 : *std::max_element(at.begin(), at.end());
  r.measured["nations_per_vertex"] = dmax;
  r.claim("declared_d", dmax <= m.declared_d, std::to_string(dmax));
  Graph gp = apply_shortcuts(ms.shortcuts);
  r.claim("map_graph_equals_oracle", induced_subgraph(gp, ms.nation_vertices) == map_graph_oracle(m));
  ShortcutValidation sv = validate_shortcuts(ms.shortcuts);
  long long cap = std::max(0, m.declared_d * (m.declared_d - 3) / 2);
  r.measured["k_actual"] = sv.k_actual;
  r.measured["load"] = sv.d_actual;
  r.caps["load"] = cap;
  r.claim("system_paths", sv.violations.empty());
  r.claim("path_length", sv.k_actual <= 2);
  r.claim("load", sv.d_actual <= cap, std::to_string(sv.d_actual));
  lift_over_planar(r, ms.shortcuts.base, ms.shortcuts, o);
  return r;
}

PipelineReport run_string(const std::vector<Polyline>& curves, int delta, const PipelineOptions& o) {
  PipelineReport r = start("string", o);
  r.params["curves"] = curves.size();
  StringShortcuts ss = stage("string-shortcuts", [&] { return string_shortcuts(curves, delta); });
  r.params["delta"] = ss.delta;
  Graph gp = apply_shortcuts(ss.shortcuts);
  r.claim("string_graph_equals_oracle",
          induced_subgraph(gp, ss.representative) == string_graph_oracle(curves));
  ShortcutValidation sv = validate_shortcuts(ss.shortcuts);
  r.measured["k_actual"] = sv.k_actual;
  r.measured["load"] = sv.d_actual;
  r.caps["path_length"] = ss.delta + 1;
  r.caps["load"] = ss.delta + 1;
  r.claim("system_paths", sv.violations.empty());
  r.claim("path_length", sv.k_actual <= ss.delta + 1);
  r.claim("load", sv.d_actual <= ss.delta + 1, std::to_string(sv.d_actual));
  lift_over_planar(r, ss.g0, ss.shortcuts, o);
  return r;
}

PipelineReport run_knn(const std::vector<Point>& pts, int k, const PipelineOptions& o) {
  PipelineReport r = start("knn", o);
  r.params["n"] = pts.size();
  r.params["k"] = k;
  GeometricGraph gg = stage("knn-build", [&] { return knn_build(pts, k); });
  KnnStats st = knn_crossing_stats(gg, k, o.exec);
  r.measured["max_degree"] = st.max_degree;
  r.measured["max_crossings"] = st.max_crossings;
  r.measured["total_crossings"] = st.total_crossings;
  r.caps["max_degree"] = 6 * k;
  r.caps["max_crossings"] = 78LL * k * k - 6LL * k;
  r.claim("max_degree", st.max_degree <= 6 * k);
  r.claim("max_crossings", st.max_crossings <= 78LL * k * k - 6LL * k);
  r.dot = to_dot(gg.g);
  return r;
}

PipelineReport run_p_centered(const Graph& g, int p, const PipelineOptions& o) {
  PipelineReport r = start("p-centered", o);
  r.params["n"] = g.n();
  r.params["p"] = p;
  LayeredPartition lp;
  if (is_planar(g)) {
    lp = stage("planar-base", [&] { return planar_base(g); });
  } else {
    lp.g = g;
    lp.partition = HPartition::from_part_of(std::vector<int>(g.n(), 0), 1);
    lp.h = Graph(1);
    lp.td.bags = {{0}};
    lp.layering = Layering::from_layer_of(std::vector<int>(g.n(), 0));
  }
  const Graph& h = lp.h;
  ChiMode mode = h.n() <= o.chip_cap ? ChiMode::exact : ChiMode::heuristic;
  ChiResult chi = stage("chi-p", [&] { return chi_p_small(h, p, mode, o.chip_cap); });
  r.measured["gamma_colours"] = chi.colours;
  r.measured["gamma_exact"] = chi.exact;
  long long chi_cap = binom(p + lp.td.width(), lp.td.width());
  r.caps["gamma_colours"] = chi_cap;
  r.measured["gamma_within_cap"] = chi.colours <= chi_cap;  // reported, not asserted
  if (o.chi_checks && h.n() <= o.checker_cap)
    r.claim("gamma_valid", check_p_centered(h, p, chi.colouring, o.checker_cap, o.exec).valid);
  int ell = layered_width(lp.partition, lp.layering);
  ProductColouring pc = stage("lift-p-centered", [&] {
    return lift_p_centered(g, lp.partition, lp.layering, ell, p, chi.colouring);
  });
  r.measured["colours"] = pc.colours;
  r.caps["colours"] = pc.cap;
  r.claim("colour_count", pc.colours <= pc.cap);
  if (o.chi_checks && g.n() <= o.checker_cap) {
    PCenteredCheck ck = check_p_centered(g, p, pc.flat, o.checker_cap, o.exec);
    r.claim("p_centered", ck.valid);
  }
  json cols = json::array();
  for (auto& t : pc.triple) cols.push_back(t);
  r.artifacts["colours"] = cols;
  return r;
}

namespace {

ShortcutSystem system_from_json(const Graph& g, const json& j) {
  ShortcutSystem s;
  s.base = g;
  s.paths = sets_from_json(j.at("shortcuts"));
  s.declared_k = j.value("k", 0);
  s.declared_d = j.value("d", 0);
  return s;
}

}  // namespace

PipelineReport run_pipeline(const std::string& name, const std::string& text,
                            const PipelineOptions& o) {
  if (name == "knn") {
    std::vector<Point> pts;
    int k = o.k >= 0 ? o.k : 1;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
      json j = parse_json(text);
      for (auto& p : j.at("points")) pts.push_back(point_from_json(p));
      if (o.k < 0) k = j.value("k", 1);
    } else {
      pts = points_from_csv(text);
    }
    return run_knn(pts, k, o);
  }
  json j = parse_json(text);
  try {
    if (name == "tripod") return run_tripod(plane_graph_from_json(j), o);
    if (name == "kplanar") {
      Drawing d = drawing_from_json(j);
      int k = o.k >= 0 ? o.k : j.value("k", -1);
      if (k < 0) k = planarize(d).max_crossings_per_edge;
      return run_kplanar(d, k, o);
    }
    if (name == "one-planar") return run_one_planar(plane_graph_from_json(j), o);
    if (name == "shortcut") {
      Graph g = graph_from_json(j.at("graph"));
      ShortcutSystem s = system_from_json(g, j);
      HPartition p = HPartition::from_parts(g.n(), sets_from_json(j.at("partition")));
      Layering l = Layering::from_layers(g.n(), sets_from_json(j.at("layering")));
      if (j.contains("decomposition")) {
        TreeDecomposition td = td_from_json(j.at("decomposition"));
        return run_shortcut(g, s, p, l, &td, o);
      }
      return run_shortcut(g, s, p, l, nullptr, o);
    }
    if (name == "power") {
      Graph g = graph_from_json(j.contains("graph") ? j.at("graph") : j);
      return run_power(g, o.k >= 0 ? o.k : j.value("k", 2), o);
    }
    if (name == "map") return run_map(map_from_json(j), o);
    if (name == "string") {
      int delta = o.delta >= 0 ? o.delta : (j.is_object() ? j.value("delta", -1) : -1);
      return run_string(curves_from_json(j), delta, o);
    }
    if (name == "p-centered") {
      Graph g = graph_from_json(j.contains("graph") ? j.at("graph") : j);
      return run_p_centered(g, j.is_object() && j.contains("p") ? j.at("p").get<int>() : o.p, o);
    }
  } catch (const json::exception& e) {
    throw MalformedInput(std::string("instance: ") + e.what());
  }
  throw MalformedInput("unknown pipeline '" + name + "'");
}

std::vector<std::string> pipeline_names() {
  return {"tripod", "kplanar", "one-planar", "shortcut", "power", "map", "string", "knn", "p-centered"};
}

std::vector<std::string> generator_names() {
  return {"triangulation", "one-plane", "kplane", "knn", "map", "curves", "graph", "shortcut",
          "p-centered"};
}

std::string generate_instance(const std::string& cls, const json& params, std::uint64_t seed) {
  auto get = [&](const char* key, int dflt) { return params.value(key, dflt); };
  json out;
  if (cls == "triangulation") {
    out = to_json(random_triangulation(get("n", 50), seed));
  } else if (cls == "one-plane") {
    out = to_json(random_one_plane(get("rows", 5), get("cols", 5), params.value("p", 0.5), seed));
  } else if (cls == "kplane") {
    int k = get("k", 1);
    out = to_json(random_kplane_drawing(get("n", 30), k, seed));
    out["k"] = k;
  } else if (cls == "knn") {
    return points_to_csv(random_points(get("n", 200), seed));
  } else if (cls == "map") {
    out = to_json(random_map(get("n", 30), seed));
  } else if (cls == "curves") {
    out["curves"] = curves_to_json(random_curves(get("n", 10), seed));
  } else if (cls == "graph") {
    out["graph"] = to_json(random_graph(get("n", 20), params.value("deg", 3.0), seed));
    out["k"] = get("k", 2);
  } else if (cls == "shortcut") {
    PlaneGraph tri = random_triangulation(get("n", 40), seed);
    Graph g = tri.simple_graph();
    LayeredPartition lp = tripod_partition(tri);
    int k = get("k", 2), d = get("d", 2);
    ShortcutSystem s = random_shortcuts(g, k, d, get("paths", g.n()), seed + 1);
    out["graph"] = to_json(g);
    out["shortcuts"] = s.paths;
    out["k"] = k;
    out["d"] = d;
    out["partition"] = lp.partition.parts;
    out["layering"] = lp.layering.layers;
    out["decomposition"] = to_json(lp.td);
  } else if (cls == "p-centered") {
    out["graph"] = to_json(random_triangulation(get("n", 12), seed).simple_graph());
    out["p"] = get("p", 2);
  } else {
    throw MalformedInput("unknown generator class '" + cls + "'");
  }
  return out.dump(1) + "\n";
}

}  // namespace prodstruct

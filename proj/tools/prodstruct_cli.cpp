#include <CLI11.hpp>

#include <iostream>

#include "prodstruct/bounds.h"
#include "prodstruct/dot.h"
#include "prodstruct/io.h"
#include "prodstruct/pipeline.h"

using namespace prodstruct;

namespace {

std::string dot_for(const json& j) {
  if (j.contains("bags") && j.contains("edges")) return to_dot(td_from_json(j));
  if (j.contains("decomposition") && !j.contains("graph")) return to_dot(td_from_json(j.at("decomposition")));
  if (j.contains("graph") && j.contains("partition")) {
    Graph g = graph_from_json(j.at("graph"));
    return to_dot(g, HPartition::from_parts(g.n(), sets_from_json(j.at("partition"))));
  }
  if (j.contains("graph")) return to_dot(graph_from_json(j.at("graph")));
  if (j.contains("rotation")) return to_dot(plane_graph_from_json(j).simple_graph());
  if (j.contains("points") && j.contains("edges")) {
    Drawing d = drawing_from_json(j);
    return to_dot(Graph(static_cast<int>(d.points.size()), d.edges));
  }
  return to_dot(graph_from_json(j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product structure decompositions for non-minor-closed graph classes"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  std::string cls;
  int n = -1, k = -1, rows = -1, cols = -1, paths = -1, dparam = -1, pparam = -1;
  double prob = -1, deg = -1;
  gen->add_option("class", cls, "instance class")->required()->check(CLI::IsMember(generator_names()));
  gen->add_option("--n", n, "vertex/point/curve count");
  gen->add_option("--k", k, "crossings per edge / power / path length");
  gen->add_option("--rows", rows);
  gen->add_option("--cols", cols);
  gen->add_option("--prob", prob, "probability a grid face gets both diagonals");
  gen->add_option("--deg", deg, "expected average degree");
  gen->add_option("--d", dparam, "internal load");
  gen->add_option("--paths", paths, "number of shortcut attempts");
  gen->add_option("--p", pparam);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* run = app.add_subcommand("run", "run a pipeline on an instance");
  std::string pipeline, in_path, json_out, dot_out;
  PipelineOptions opt;
  run->add_option("pipeline", pipeline)->required()->check(CLI::IsMember(pipeline_names()));
  run->add_option("file", in_path)->required();
  run->add_option("--exact-tw-cap", opt.exact_tw_cap)->capture_default_str();
  run->add_option("--chip-cap", opt.chip_cap)->capture_default_str();
  run->add_option("--checker-cap", opt.checker_cap)->capture_default_str();
  run->add_option("--seed", opt.seed, "recorded in the report");
  run->add_option("--k", opt.k);
  run->add_option("--p", opt.p)->capture_default_str();
  run->add_option("--delta", opt.delta);
  bool no_tw = false, no_chi = false, serial = false;
  run->add_flag("--no-exact-tw", no_tw, "skip exact treewidth oracles");
  run->add_flag("--no-chi-checks", no_chi, "skip p-centered checkers");
  run->add_flag("--serial", serial, "use the serial reference kernels");
  run->add_option("--json-out", json_out);
  run->add_option("--dot-out", dot_out);

  auto* dot = app.add_subcommand("export-dot", "DOT for a graph, partition or decomposition file");
  std::string dot_in;
  dot->add_option("file", dot_in)->required();
  dot->add_option("-o,--out", out_path);

  auto* bounds = app.add_subcommand("bounds", "theoretical caps for a class");
  std::string bclass;
  BoundParams bp;
  bounds->add_option("class", bclass)->required();
  bounds->add_option("--k", bp.k);
  bounds->add_option("--p", bp.p);
  bounds->add_option("--delta", bp.delta);
  bounds->add_option("--ell", bp.ell);
  bounds->add_option("--t", bp.t);
  bounds->add_option("--d", bp.d);
  bounds->add_option("--chi-h", bp.chi_h);

  CLI11_PARSE(app, argc, argv);

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) std::cout << text;
    else write_text(out_path, text);
  };

  try {
    if (*gen) {
      json params = json::object();
      if (n >= 0) params["n"] = n;
      if (k >= 0) params["k"] = k;
      if (rows >= 0) params["rows"] = rows;
      if (cols >= 0) params["cols"] = cols;
      if (prob >= 0) params["p"] = prob;
      if (deg >= 0) params["deg"] = deg;
      if (dparam >= 0) params["d"] = dparam;
      if (paths >= 0) params["paths"] = paths;
      if (pparam >= 0) params["p"] = pparam;
      emit(generate_instance(cls, params, seed));
      return 0;
    }
    if (*run) {
      opt.exact_tw = !no_tw;
      opt.chi_checks = !no_chi;
      opt.exec = serial ? Exec::serial : Exec::parallel;
      PipelineReport r = run_pipeline(pipeline, read_text(in_path), opt);
      std::string text = r.to_json().dump(1) + "\n";
      if (json_out.empty()) std::cout << text;
      else write_text(json_out, text);
      if (!dot_out.empty()) write_text(dot_out, r.dot);
      std::cerr << (r.ok() ? "PASS" : "FAIL") << " " << pipeline << "\n";
      for (auto& f : r.failures) std::cerr << "  " << f << "\n";
      return r.ok() ? 0 : 1;
    }
    if (*dot) {
      std::string text = read_text(dot_in);
      auto first = text.find_first_not_of(" \t\r\n");
      if (first == std::string::npos || text[first] != '{') throw MalformedInput("export-dot expects JSON");
      emit(dot_for(parse_json(text)));
      return 0;
    }
    if (*bounds) {
      json rows_out = json::array();
      for (auto& row : bound_report(parse_bound_class(bclass), bp)) {
        json r;
        r["quantity"] = row.quantity;
        r["formula"] = row.formula;
        if (row.value >= 0) r["value"] = row.value;
        rows_out.push_back(r);
      }
      std::cout << rows_out.dump(1) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

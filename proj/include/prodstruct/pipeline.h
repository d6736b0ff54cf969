#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prodstruct/colouring.h"
#include "prodstruct/errors.h"
#include "prodstruct/io.h"
#include "prodstruct/lift.h"
#include "prodstruct/planar.h"
#include "prodstruct/shortcut.h"
#include "prodstruct/treewidth.h"

namespace prodstruct {

struct PipelineOptions {
  int exact_tw_cap = kDefaultExactTwCap;
  int chip_cap = kDefaultChiCap;
  int checker_cap = kDefaultCheckerCap;
  std::uint64_t seed = 0;
  int k = -1;      ///< overrides the instance's k when >= 0
  int p = 2;
  int delta = -1;  ///< string pipeline; < 0 uses the instance value or the measured one
  bool exact_tw = true;
  bool chi_checks = true;
  Exec exec = Exec::parallel;
};

struct PipelineReport {
  std::string pipeline;
  std::uint64_t seed = 0;
  json params = json::object();
  json measured = json::object();
  json caps = json::object();
  json claims = json::object();
  std::vector<std::string> failures;
  json artifacts = json::object();
  std::string dot;

  void claim(const std::string& name, bool ok, const std::string& why = "");
  bool ok() const;
  json to_json() const;
};

/// A pipeline stage raised an error; what() names the stage.
class StageFailure : public Error {
 public:
  StageFailure(const std::string& stage, const std::string& msg)
      : Error("stage " + stage + ": " + msg), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Tripod partition of a planar graph through an embedding and a
/// triangulation on the same vertex set. Graphs with n < 3 get one part.
LayeredPartition planar_base(const Graph& g);

PipelineReport run_tripod(const PlaneGraph& g, const PipelineOptions& o);
PipelineReport run_kplanar(const Drawing& d, int k, const PipelineOptions& o);
PipelineReport run_one_planar(const PlaneGraph& g, const PipelineOptions& o);
/// User-supplied base partition; td is a decomposition of the quotient.
PipelineReport run_shortcut(const Graph& g, const ShortcutSystem& s, const HPartition& p,
                            const Layering& l, const TreeDecomposition* td,
                            const PipelineOptions& o);
PipelineReport run_power(const Graph& g, int k, const PipelineOptions& o);
PipelineReport run_map(const MapInstance& m, const PipelineOptions& o);
PipelineReport run_string(const std::vector<Polyline>& curves, int delta, const PipelineOptions& o);
PipelineReport run_knn(const std::vector<Point>& pts, int k, const PipelineOptions& o);
PipelineReport run_p_centered(const Graph& g, int p, const PipelineOptions& o);

/// Dispatch by pipeline name on an instance file's text.
PipelineReport run_pipeline(const std::string& name, const std::string& text,
                            const PipelineOptions& o);

std::vector<std::string> pipeline_names();

/// Instance text for a generator class; params holds "n", "k", "rows", ...
std::string generate_instance(const std::string& cls, const json& params, std::uint64_t seed);

std::vector<std::string> generator_names();

}  // namespace prodstruct

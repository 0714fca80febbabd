#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphfit/benchmarks.hpp"
#include "graphfit/fit_report.hpp"
#include "graphfit/gsom.hpp"
#include "graphfit/principal_tree.hpp"

namespace graphfit {

// Parameters for the 9-benchmark x 2-method comparison matrix. Thresholds
// default to the per-variant values; the INI file may override them.
struct RunConfig {
  SomConfig som;
  ElasticConfig elastic;
  int n_points = 1000;
  std::uint64_t base_seed = 1729;
  bool plots = false;
  int barcode_min_max_order = 4;
  std::optional<double> threshold_thin;
  std::optional<double> threshold_scattered;
  std::optional<double> threshold_scattered_noised;

  double threshold(Variant v) const;

  // Flat INI document: [benchmarks], [gsom], [elastic], [thresholds],
  // [compare] sections. Unknown keys are rejected.
  static RunConfig load_ini(const std::string& path);
};

struct CompareRow {
  FitReport report;
  // Which complexity measures this row wins against the other method on the
  // same benchmark: subset of {"N", "GC", "Length"} joined by '+'.
  std::string wins;
};

// Report CSV layout used by run_compare. Wall times are deliberately not
// part of this file so repeated runs are byte-identical.
std::string compare_csv_header();
std::string compare_csv(const std::vector<CompareRow>& rows);

// Generates the nine benchmarks with fixed seeds, fits both methods on
// each at the variant threshold, writes report.csv, per-run graph JSON
// under graphs/, and (optionally) SVG plots under plots/.
std::vector<CompareRow> run_compare(const RunConfig& cfg,
                                    const std::string& out_dir);

}  // namespace graphfit

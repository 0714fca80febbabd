#pragma once

#include <string>

#include "graphfit/dataset.hpp"
#include "graphfit/embedded_graph.hpp"

namespace graphfit {

enum class FitStatus { converged, stalled };

std::string to_string(FitStatus status);

// One row of the comparison protocol: what was fitted and how it scored.
struct FitReport {
  std::string pattern;
  std::string variant;
  std::string method;  // "GSOM" or "PT"
  int n_nodes = 0;
  double fvu = 0.0;
  double gc = 0.0;
  double length = 0.0;
  std::string barcode;
  FitStatus status = FitStatus::converged;
  long long wall_time_ms = 0;
};

// Fills n_nodes, gc, length and barcode from the graph. The barcode is
// rendered with a 4-star slot by default, the display convention used by
// the comparison harness.
void fill_measures(FitReport& report, const EmbeddedGraph& graph,
                   int barcode_min_max_order = 4);

// Fixed column layout:
// pattern,variant,method,n_nodes,fvu,gc,length,barcode,status,wall_time_ms
std::string fit_report_csv_header();
std::string fit_report_csv_row(const FitReport& report);
void save_fit_report_csv(const std::string& path, const FitReport& report);

}  // namespace graphfit

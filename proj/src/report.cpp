#include "graphfit/fit_report.hpp"

#include <cstdio>
#include <fstream>

#include "graphfit/error.hpp"

namespace graphfit {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string to_string(FitStatus status) {
  return status == FitStatus::converged ? "converged" : "stalled";
}

void fill_measures(FitReport& report, const EmbeddedGraph& graph,
                   int barcode_min_max_order) {
  report.n_nodes = graph.size();
  report.gc = geometrical_complexity(graph);
  report.length = graph_length(graph);
  report.barcode = structural_barcode(graph, barcode_min_max_order).render();
}

std::string fit_report_csv_header() {
  return "pattern,variant,method,n_nodes,fvu,gc,length,barcode,status,"
         "wall_time_ms";
}

std::string fit_report_csv_row(const FitReport& r) {
  std::string row;
  row += r.pattern + ',' + r.variant + ',' + r.method + ',';
  row += std::to_string(r.n_nodes) + ',';
  row += format_double(r.fvu) + ',';
  row += format_double(r.gc) + ',';
  row += format_double(r.length) + ',';
  row += r.barcode + ',';
  row += to_string(r.status) + ',';
  row += std::to_string(r.wall_time_ms);
  return row;
}

void save_fit_report_csv(const std::string& path, const FitReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write report file: " + path);
  out << fit_report_csv_header() << '\n' << fit_report_csv_row(report) << '\n';
  if (!out) throw IoError("cannot write report file: " + path);
}

}  // namespace graphfit

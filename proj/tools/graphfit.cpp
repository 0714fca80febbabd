// graphfit command line: generate benchmark datasets, fit either
// approximator family, run the full comparison matrix, and plot results.
//
// Exit codes: 0 ok, 2 usage error, 3 I/O error, 4 degenerate dataset,
// 5 unsupported operation (e.g. plotting non-2-D data).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphfit/accuracy.hpp"
#include "graphfit/benchmarks.hpp"
#include "graphfit/compare.hpp"
#include "graphfit/error.hpp"
#include "graphfit/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitUnsupported = 5;

namespace fs = std::filesystem;

std::string sidecar_path(const std::string& dataset_path) {
  fs::path p(dataset_path);
  p.replace_extension(".spec.json");
  return p.string();
}

int cmd_generate(const std::string& pattern, const std::string& variant,
                 int n, std::uint64_t seed, const std::string& out) {
  graphfit::BenchmarkSpec spec;
  try {
    spec.pattern = graphfit::parse_pattern(pattern);
    spec.variant = graphfit::parse_variant(variant);
  } catch (const graphfit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  spec.n_points = n;
  spec.seed = seed;
  graphfit::Dataset data = graphfit::generate(spec);
  data.save_csv(out);
  graphfit::save_spec_json(sidecar_path(out), spec);
  return kExitOk;
}

int cmd_fit(const std::string& method, const std::string& data_path,
            double threshold, const std::string& config_path,
            const std::string& out_graph, const std::string& out_report) {
  if (threshold <= 0.0 || threshold >= 1.0) {
    std::cerr << "error: threshold must lie in (0, 1)\n";
    return kExitUsage;
  }
  std::string m;
  if (method == "gsom" || method == "GSOM") m = "GSOM";
  else if (method == "pt" || method == "PT") m = "PT";
  else {
    std::cerr << "error: unknown method '" << method << "' (valid: gsom, pt)\n";
    return kExitUsage;
  }

  graphfit::RunConfig cfg;
  if (!config_path.empty()) cfg = graphfit::RunConfig::load_ini(config_path);

  graphfit::Dataset data = graphfit::Dataset::load_csv(data_path);

  graphfit::FitReport report;
  graphfit::EmbeddedGraph graph(data.dim());
  if (m == "GSOM") {
    graphfit::SomConfig som = cfg.som;
    som.fvu_threshold = threshold;
    auto res = graphfit::fit_gsom(data, som);
    report = res.report;
    graph = res.chain.as_graph();
  } else {
    graphfit::ElasticConfig el = cfg.elastic;
    el.fvu_threshold = threshold;
    auto res = graphfit::fit_principal_tree(data, el);
    report = res.report;
    graph = res.graph;
  }

  // Pattern/variant from the generator sidecar when present, else the stem.
  report.pattern = fs::path(data_path).stem().string();
  std::string sc = sidecar_path(data_path);
  if (fs::exists(sc)) {
    try {
      std::ifstream in(sc);
      std::stringstream ss;
      ss << in.rdbuf();
      auto j = nlohmann::json::parse(ss.str());
      report.pattern = j.value("pattern", report.pattern);
      report.variant = j.value("variant", report.variant);
    } catch (const std::exception&) {
      // sidecar is advisory; a bad one does not fail the fit
    }
  }

  graph.save_json(out_graph);
  graphfit::save_fit_report_csv(out_report, report);
  std::cout << graphfit::fit_report_csv_header() << "\n"
            << graphfit::fit_report_csv_row(report) << "\n";
  return kExitOk;
}

int cmd_compare(const std::string& config_path, const std::string& out_dir,
                bool plots, int n_points, std::int64_t seed) {
  graphfit::RunConfig cfg;
  if (!config_path.empty()) cfg = graphfit::RunConfig::load_ini(config_path);
  if (plots) cfg.plots = true;
  if (n_points > 0) cfg.n_points = n_points;
  if (seed >= 0) cfg.base_seed = static_cast<std::uint64_t>(seed);

  auto rows = graphfit::run_compare(cfg, out_dir);
  std::cout << graphfit::compare_csv(rows);
  return kExitOk;
}

int cmd_plot(const std::string& data_path, const std::string& graph_path,
             const std::string& out) {
  graphfit::Dataset data = graphfit::Dataset::load_csv(data_path);
  if (graph_path.empty()) {
    graphfit::write_plot_svg(out, data, nullptr);
    return kExitOk;
  }
  graphfit::EmbeddedGraph graph = graphfit::EmbeddedGraph::load_json(graph_path);
  graphfit::write_plot_svg(out, data, &graph);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphfit: growing self-organizing polygonal lines and elastic "
               "principal trees, with accuracy/complexity scoring"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Generate a benchmark dataset");
  std::string g_pattern, g_variant = "thin", g_out;
  int g_n = 1000;
  std::uint64_t g_seed = 0;
  gen->add_option("--pattern", g_pattern, "sinus, spiral or tree")->required();
  gen->add_option("--variant", g_variant, "thin, scattered or scattered_noised");
  gen->add_option("--n", g_n, "number of points")->check(CLI::PositiveNumber);
  gen->add_option("--seed", g_seed, "random seed");
  gen->add_option("-o,--out", g_out, "output CSV path")->required();

  auto* fit = app.add_subcommand("fit", "Fit one approximator to a dataset");
  std::string f_method, f_data, f_config, f_graph = "graph.json",
              f_report = "report.csv";
  double f_threshold = 0.001;
  fit->add_option("--method", f_method, "gsom or pt")->required();
  fit->add_option("--data", f_data, "dataset CSV")->required();
  fit->add_option("--threshold", f_threshold, "FVU stopping threshold");
  fit->add_option("--config", f_config, "INI configuration file");
  fit->add_option("--out-graph", f_graph, "output graph JSON path");
  fit->add_option("--out-report", f_report, "output report CSV path");

  auto* cmp = app.add_subcommand(
      "compare", "Run the 9-benchmark x 2-method comparison matrix");
  std::string c_config, c_out;
  bool c_plots = false;
  int c_n = 0;
  std::int64_t c_seed = -1;
  cmp->add_option("--config", c_config, "INI configuration file");
  cmp->add_option("-o,--out", c_out, "output directory")->required();
  cmp->add_flag("--plots", c_plots, "also write SVG plots");
  cmp->add_option("--n-points", c_n, "points per benchmark (override)");
  cmp->add_option("--seed", c_seed, "base seed (override)");

  auto* plot = app.add_subcommand("plot", "Render data and a fitted graph to SVG");
  std::string p_data, p_graph, p_out;
  plot->add_option("--data", p_data, "dataset CSV")->required();
  plot->add_option("--graph", p_graph, "graph JSON (optional)");
  plot->add_option("-o,--out", p_out, "output SVG path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_generate(g_pattern, g_variant, g_n, g_seed, g_out);
    if (fit->parsed())
      return cmd_fit(f_method, f_data, f_threshold, f_config, f_graph, f_report);
    if (cmp->parsed())
      return cmd_compare(c_config, c_out, c_plots, c_n, c_seed);
    if (plot->parsed())
      return cmd_plot(p_data, p_graph, p_out);
  } catch (const graphfit::DegenerateDataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const graphfit::UnsupportedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const graphfit::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const graphfit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}

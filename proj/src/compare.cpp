#include "graphfit/compare.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>

#include "graphfit/accuracy.hpp"
#include "graphfit/error.hpp"
#include "graphfit/svg.hpp"

namespace graphfit {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_num(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    double v = std::stod(value, &pos);
    if (pos != value.size()) throw Error("");
    return v;
  } catch (const std::exception&) {
    throw Error("bad value for config key '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw Error("bad value for config key '" + key + "': " + value);
}

}  // namespace

double RunConfig::threshold(Variant v) const {
  switch (v) {
    case Variant::thin:
      return threshold_thin.value_or(threshold_for(v));
    case Variant::scattered:
      return threshold_scattered.value_or(threshold_for(v));
    case Variant::scattered_noised:
      return threshold_scattered_noised.value_or(threshold_for(v));
  }
  return threshold_for(v);
}

RunConfig RunConfig::load_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[' && s.back() == ']') {
      section = trim(s.substr(1, s.size() - 2));
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw Error(path + ":" + std::to_string(line_no) + ": expected key = value");
    std::string key = section + "." + trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));

    if (key == "benchmarks.n_points")
      cfg.n_points = static_cast<int>(parse_num(key, value));
    else if (key == "benchmarks.base_seed")
      cfg.base_seed = static_cast<std::uint64_t>(parse_num(key, value));
    else if (key == "gsom.neighbourhood_radius")
      cfg.som.neighbourhood_radius = parse_num(key, value);
    else if (key == "gsom.max_batch_iterations")
      cfg.som.max_batch_iterations = static_cast<int>(parse_num(key, value));
    else if (key == "gsom.convergence_tol")
      cfg.som.convergence_tol = parse_num(key, value);
    else if (key == "gsom.max_nodes")
      cfg.som.max_nodes = static_cast<int>(parse_num(key, value));
    else if (key == "elastic.lambda_stretch")
      cfg.elastic.lambda_stretch = parse_num(key, value);
    else if (key == "elastic.mu_bend")
      cfg.elastic.mu_bend = parse_num(key, value);
    else if (key == "elastic.optimize_tol")
      cfg.elastic.optimize_tol = parse_num(key, value);
    else if (key == "elastic.max_optimize_iterations")
      cfg.elastic.max_optimize_iterations =
          static_cast<int>(parse_num(key, value));
    else if (key == "elastic.max_outer_iterations")
      cfg.elastic.max_outer_iterations =
          static_cast<int>(parse_num(key, value));
    else if (key == "thresholds.thin")
      cfg.threshold_thin = parse_num(key, value);
    else if (key == "thresholds.scattered")
      cfg.threshold_scattered = parse_num(key, value);
    else if (key == "thresholds.scattered_noised")
      cfg.threshold_scattered_noised = parse_num(key, value);
    else if (key == "compare.plots")
      cfg.plots = parse_bool(key, value);
    else if (key == "compare.barcode_min_max_order")
      cfg.barcode_min_max_order = static_cast<int>(parse_num(key, value));
    else
      throw Error(path + ":" + std::to_string(line_no) +
                  ": unknown config key '" + key + "'");
  }
  return cfg;
}

std::string compare_csv_header() {
  return "pattern,variant,method,n_nodes,fvu,gc,length,barcode,status,wins";
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::string out = compare_csv_header() + "\n";
  for (const CompareRow& row : rows) {
    const FitReport& r = row.report;
    std::string line = fit_report_csv_row(r);
    // Drop the trailing wall-time column so repeated runs stay byte-equal.
    line = line.substr(0, line.rfind(','));
    out += line + ',' + row.wins + "\n";
  }
  return out;
}

std::vector<CompareRow> run_compare(const RunConfig& cfg,
                                    const std::string& out_dir) {
  fs::create_directories(fs::path(out_dir) / "graphs");
  if (cfg.plots) fs::create_directories(fs::path(out_dir) / "plots");

  const Pattern patterns[] = {Pattern::sinus, Pattern::spiral, Pattern::tree};
  const Variant variants[] = {Variant::thin, Variant::scattered,
                              Variant::scattered_noised};

  std::vector<CompareRow> rows;
  for (int pi = 0; pi < 3; ++pi) {
    for (int vi = 0; vi < 3; ++vi) {
      BenchmarkSpec bspec{patterns[pi], variants[vi], cfg.n_points,
                          cfg.base_seed + static_cast<std::uint64_t>(pi * 3 + vi)};
      Dataset data = generate(bspec);
      const double threshold = cfg.threshold(variants[vi]);
      const std::string stem =
          to_string(patterns[pi]) + "_" + to_string(variants[vi]);

      for (const std::string& method : {std::string("GSOM"), std::string("PT")}) {
        FitReport report;
        EmbeddedGraph graph(data.dim());
        if (method == "GSOM") {
          SomConfig som = cfg.som;
          som.fvu_threshold = threshold;
          GsomResult res = fit_gsom(data, som);
          report = res.report;
          graph = res.chain.as_graph();
        } else {
          ElasticConfig el = cfg.elastic;
          el.fvu_threshold = threshold;
          PtResult res = fit_principal_tree(data, el);
          report = res.report;
          graph = res.graph;
        }
        report.pattern = to_string(patterns[pi]);
        report.variant = to_string(variants[vi]);
        fill_measures(report, graph, cfg.barcode_min_max_order);

        const std::string base = stem + "_" + report.method;
        graph.save_json((fs::path(out_dir) / "graphs" / (base + ".json")).string());
        if (cfg.plots)
          write_plot_svg((fs::path(out_dir) / "plots" / (base + ".svg")).string(),
                         data, &graph);
        rows.push_back({std::move(report), ""});
      }
    }
  }

  // Winner marks: per benchmark, the method with the smaller value of each
  // complexity column (both on a tie).
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const FitReport& a = rows[i].report;
    const FitReport& b = rows[i + 1].report;
    auto mark = [&](bool a_wins, bool b_wins, const char* name) {
      auto append = [&](std::string& wins) {
        if (!wins.empty()) wins += '+';
        wins += name;
      };
      if (a_wins) append(rows[i].wins);
      if (b_wins) append(rows[i + 1].wins);
    };
    mark(a.n_nodes <= b.n_nodes, b.n_nodes <= a.n_nodes, "N");
    mark(a.gc <= b.gc, b.gc <= a.gc, "GC");
    mark(a.length <= b.length, b.length <= a.length, "Length");
  }

  std::ofstream out(fs::path(out_dir) / "report.csv", std::ios::binary);
  if (!out) throw IoError("cannot write report.csv under " + out_dir);
  out << compare_csv(rows);
  if (!out) throw IoError("cannot write report.csv under " + out_dir);
  return rows;
}

}  // namespace graphfit

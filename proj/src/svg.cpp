#include "graphfit/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "graphfit/error.hpp"

namespace graphfit {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_plot_svg(const Dataset& data, const EmbeddedGraph* graph) {
  if (data.dim() != 2 || (graph && graph->dim() != 2))
    throw UnsupportedError("plotting supports 2-D only");

  double xlo = data.point(0)[0], xhi = xlo;
  double ylo = data.point(0)[1], yhi = ylo;
  auto expand = [&](double x, double y) {
    xlo = std::min(xlo, x);
    xhi = std::max(xhi, x);
    ylo = std::min(ylo, y);
    yhi = std::max(yhi, y);
  };
  for (int i = 1; i < data.size(); ++i)
    expand(data.point(i)[0], data.point(i)[1]);
  if (graph)
    for (int v = 0; v < graph->size(); ++v)
      expand(graph->position(v)[0], graph->position(v)[1]);

  double w = xhi - xlo, h = yhi - ylo;
  double pad = 0.05 * std::max({w, h, 1e-9});
  xlo -= pad;
  ylo -= pad;
  w += 2 * pad;
  h += 2 * pad;
  // Flip y so the plot is oriented the usual way up.
  auto fy = [&](double y) { return (ylo + h) - (y - ylo); };

  double diag = std::hypot(w, h);
  double r_data = 0.004 * diag;
  double r_node = 0.007 * diag;
  double stroke = 0.003 * diag;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xlo)
      << " " << fmt(ylo) << " " << fmt(w) << " " << fmt(h) << "\">\n";
  out << "<rect x=\"" << fmt(xlo) << "\" y=\"" << fmt(ylo) << "\" width=\""
      << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\"white\"/>\n";
  out << "<g fill=\"#b9c4d0\">\n";
  for (int i = 0; i < data.size(); ++i)
    out << "<circle cx=\"" << fmt(data.point(i)[0]) << "\" cy=\""
        << fmt(fy(data.point(i)[1])) << "\" r=\"" << fmt(r_data) << "\"/>\n";
  out << "</g>\n";
  if (graph) {
    out << "<g stroke=\"#1f3552\" stroke-width=\"" << fmt(stroke) << "\">\n";
    for (const Edge& e : graph->edges()) {
      auto a = graph->position(e.a);
      auto b = graph->position(e.b);
      out << "<line x1=\"" << fmt(a[0]) << "\" y1=\"" << fmt(fy(a[1]))
          << "\" x2=\"" << fmt(b[0]) << "\" y2=\"" << fmt(fy(b[1]))
          << "\"/>\n";
    }
    out << "</g>\n<g fill=\"#16233a\">\n";
    for (int v = 0; v < graph->size(); ++v)
      out << "<circle cx=\"" << fmt(graph->position(v)[0]) << "\" cy=\""
          << fmt(fy(graph->position(v)[1])) << "\" r=\"" << fmt(r_node)
          << "\"/>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_plot_svg(const std::string& path, const Dataset& data,
                    const EmbeddedGraph* graph) {
  std::string svg = render_plot_svg(data, graph);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write plot file: " + path);
  out << svg;
  if (!out) throw IoError("cannot write plot file: " + path);
}

}  // namespace graphfit

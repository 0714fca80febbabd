#pragma once

#include <string>

#include "graphfit/dataset.hpp"
#include "graphfit/embedded_graph.hpp"

namespace graphfit {

// 2-D scatter plot: data points as light markers, graph edges as lines,
// graph nodes as dark markers. The viewBox is auto-scaled to the combined
// bounds with a 5% margin. Throws Error for dimensions other than 2.
void write_plot_svg(const std::string& path, const Dataset& data,
                    const EmbeddedGraph* graph);

std::string render_plot_svg(const Dataset& data, const EmbeddedGraph* graph);

}  // namespace graphfit

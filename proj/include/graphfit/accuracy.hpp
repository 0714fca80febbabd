#pragma once

#include <span>
#include <vector>

#include "graphfit/dataset.hpp"
#include "graphfit/embedded_graph.hpp"

namespace graphfit {

// A line through `base` with unit `direction`.
struct Line {
  std::vector<double> base;
  std::vector<double> direction;
};

// First principal axis of a dataset: the line through the mean along the
// top covariance eigenvector, plus the standard deviation along it.
struct PrincipalAxis {
  Line line;
  double sigma = 0.0;
};

double point_to_segment_sq_distance(std::span<const double> x,
                                    std::span<const double> a,
                                    std::span<const double> b);
double point_to_segment_distance(std::span<const double> x,
                                 std::span<const double> a,
                                 std::span<const double> b);

// Fraction of variance unexplained: summed squared orthogonal distances to
// the line over the total variance about the mean.
double fvu_line(const Dataset& data, const Line& line);

// FVU against a graph: each point contributes its squared distance to the
// union of closed edge segments (isolated nodes count as point segments;
// a graph without edges is scored by its nodes).
double fvu_graph(const Dataset& data, const EmbeddedGraph& graph);

// Top eigenvector of the (population) covariance matrix. For tied top
// eigenvalues any maximizing eigenvector may be returned; the sign is
// canonicalized so the largest-magnitude component is positive.
PrincipalAxis first_principal_component(const Dataset& data);

}  // namespace graphfit

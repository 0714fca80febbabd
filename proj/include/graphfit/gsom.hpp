#pragma once

#include <span>
#include <vector>

#include "graphfit/dataset.hpp"
#include "graphfit/embedded_graph.hpp"
#include "graphfit/fit_report.hpp"

namespace graphfit {

struct SomConfig {
  double neighbourhood_radius = 3.0;
  double fvu_threshold = 0.001;
  int max_batch_iterations = 100;
  // Convergence when the largest per-step node movement drops below
  // convergence_tol * dataset diameter.
  double convergence_tol = 1e-4;
  int max_nodes = 1000;
};

// Polygonal line: nodes stored in grid order, one edge between each pair of
// consecutive nodes.
class Chain {
public:
  explicit Chain(int dim) : dim_(dim) {}
  static Chain from_nodes(std::vector<double> coords, int dim);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(coords_.size()) / dim_; }
  std::span<const double> node(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  void set_node(int i, std::span<const double> p);
  void push_front(std::span<const double> p);
  void push_back(std::span<const double> p);
  const double* data() const { return coords_.data(); }

  EmbeddedGraph as_graph() const;

private:
  int dim_;
  std::vector<double> coords_;
};

// Triangular (linear B-spline) kernel max(0, 1 - grid_distance/radius).
double neighbourhood_weight(int grid_distance, double radius);

// One batch update: assign each point to its best-matching node (ties to
// the lowest grid index), then move every node to the neighbourhood-weighted
// mean of the data. Nodes with zero total weight keep their position.
Chain batch_som_step(const Chain& chain, const Dataset& data,
                     const SomConfig& cfg);

// Iterates batch_som_step until the maximum node displacement per step
// falls below convergence_tol * diameter, or max_batch_iterations is
// reached. On convergence the pre-step chain is returned, so re-applying
// the update to the result moves no node beyond the tolerance.
Chain batch_som_optimize(const Chain& chain, const Dataset& data,
                         const SomConfig& cfg);

// FVU of the current chain and of the two mirror-extended candidates.
struct GrowthCandidates {
  double bfvu = 0.0;  // chain extended at the front by 2*y_1 - y_2
  double efvu = 0.0;  // chain extended at the back by 2*y_k - y_{k-1}
  double cfvu = 0.0;
  std::vector<double> front_node;
  std::vector<double> back_node;
};

GrowthCandidates grow_candidates(const Chain& chain, const Dataset& data);

enum class GsomAction { grew_front, grew_back, converged, stalled };

struct GsomStep {
  int n_nodes = 0;  // chain size when the decision was taken
  double cfvu = 0.0;
  double bfvu = 0.0;  // NaN when no growth was evaluated
  double efvu = 0.0;
  GsomAction action = GsomAction::stalled;
};

struct GsomResult {
  Chain chain;
  FitReport report;
  std::vector<GsomStep> trace;
};

// Growing self-organizing polygonal line. Starts from two nodes spanning
// the first principal component at mean +- sigma, alternates batch-SOM
// optimization with endpoint growth, and stops at the FVU threshold, at
// max_nodes, or when neither endpoint extension improves the FVU (stall).
GsomResult fit_gsom(const Dataset& data, const SomConfig& cfg);

}  // namespace graphfit

#pragma once

#include <string>
#include <vector>

#include "graphfit/dataset.hpp"
#include "graphfit/embedded_graph.hpp"
#include "graphfit/fit_report.hpp"

namespace graphfit {

struct ElasticConfig {
  double lambda_stretch = 0.01;
  double mu_bend = 0.001;
  double fvu_threshold = 0.001;
  int max_outer_iterations = 400;
  // Stop the alternating optimization when the relative energy decrease per
  // iteration falls below optimize_tol.
  double optimize_tol = 1e-4;
  int max_optimize_iterations = 100;
};

// Nearest-node assignment of the data (ties to the lowest node id), with
// per-node member counts and coordinate sums.
struct Partition {
  std::vector<int> assignment;  // one node id per data point
  std::vector<int> counts;      // per node
  std::vector<double> sums;     // per node, node-major coordinate sums
};

Partition partition_by_nearest_node(const EmbeddedGraph& graph,
                                    const Dataset& data);

struct EnergyBreakdown {
  double total = 0.0;
  double approx = 0.0;   // (1/n) sum_i ||x_i - v_{K(i)}||^2
  double stretch = 0.0;  // lambda * sum_edges ||v_a - v_b||^2
  double bend = 0.0;     // mu * sum_{stars, k>=2} ||sum_i v_i - k v_0||^2
};

EnergyBreakdown elastic_energy(const EmbeddedGraph& graph, const Dataset& data,
                               const Partition& partition,
                               const ElasticConfig& cfg);

// Minimizes the total energy over all node positions with the partition
// fixed: one symmetric positive-definite solve per coordinate.
EmbeddedGraph solve_node_positions(const EmbeddedGraph& graph,
                                   const Dataset& data,
                                   const Partition& partition,
                                   const ElasticConfig& cfg);

// Alternates nearest-node partitioning with the exact positional solve
// until the relative energy decrease drops below optimize_tol or
// max_optimize_iterations is reached. Total energy is non-increasing across
// iterations; energy_trace (if given) records it per iteration.
EmbeddedGraph optimize_graph(const EmbeddedGraph& graph, const Dataset& data,
                             const ElasticConfig& cfg,
                             std::vector<double>* energy_trace = nullptr);

enum class GrammarKind { add_leaf, bisect_edge, remove_leaf, contract_edge };
enum class GrammarSet { growing, shrinking };

struct GrammarOp {
  GrammarKind kind = GrammarKind::add_leaf;
  int node = -1;       // add_leaf, remove_leaf
  Edge edge;           // bisect_edge, contract_edge

  friend bool operator==(const GrammarOp&, const GrammarOp&) = default;
};

std::string to_string(const GrammarOp& op);

// growing: one add_leaf per node, then one bisect_edge per edge;
// shrinking: one remove_leaf per degree-1 node, then one contract_edge per
// edge. Order follows node ids and the sorted edge list.
std::vector<GrammarOp> enumerate_grammar(const EmbeddedGraph& graph,
                                         GrammarSet set);

// Placement fallback for add_leaf on a node whose mirror offset vanishes
// (the node coincides with the centroid of its neighbours). The fitter
// passes 1e-3 * data diameter along the first principal component; the
// default uses the first coordinate axis at unit scale 1e-3.
struct GrammarContext {
  std::vector<double> degenerate_leaf_offset;
};

// add_leaf(v): leaf nodes mirror their single neighbour (2v - u); interior
// nodes extend away from the neighbour centroid; a zero offset falls back
// to the context offset. bisect_edge: midpoint node. remove_leaf: deletes
// the node. contract_edge: merges both ends into one node at the midpoint.
EmbeddedGraph apply_grammar(const EmbeddedGraph& graph, const GrammarOp& op,
                            const GrammarContext& ctx = {});

// Score used to select among candidates: apply the op, run one
// partition-and-solve pass, and return the total energy of the result.
double score_candidate(const EmbeddedGraph& graph, const GrammarOp& op,
                       const Dataset& data, const ElasticConfig& cfg,
                       const GrammarContext& ctx);

struct PtStep {
  int stage = 1;  // stage value when the op was selected (1..4)
  GrammarOp op;
  double fvu_before = 0.0;
  double candidate_energy = 0.0;
  int n_nodes_after = 0;
};

struct PtResult {
  EmbeddedGraph graph;
  FitReport report;
  std::vector<PtStep> trace;
};

// Elastic principal tree fitter following the growing, growing, growing,
// shrink grammar schedule. Stages 1-3 apply the best growing candidate,
// stage 4 applies the best shrinking candidate unconditionally.
PtResult fit_principal_tree(const Dataset& data, const ElasticConfig& cfg);

}  // namespace graphfit

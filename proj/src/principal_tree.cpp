#include "graphfit/principal_tree.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "graphfit/accuracy.hpp"
#include "graphfit/error.hpp"
#include "graphfit/kernels.hpp"

namespace graphfit {

namespace {

void check_config(const ElasticConfig& cfg) {
  if (cfg.lambda_stretch <= 0.0 || cfg.mu_bend <= 0.0)
    throw Error("elastic moduli must be positive");
  if (cfg.fvu_threshold <= 0.0 || cfg.fvu_threshold >= 1.0)
    throw Error("fvu threshold must lie in (0, 1)");
  if (cfg.max_outer_iterations < 1 || cfg.max_optimize_iterations < 1 ||
      cfg.optimize_tol <= 0.0)
    throw Error("bad elastic configuration");
}

void check_partition(const EmbeddedGraph& graph, const Dataset& data,
                     const Partition& p) {
  if (static_cast<int>(p.assignment.size()) != data.size() ||
      static_cast<int>(p.counts.size()) != graph.size())
    throw Error("inconsistent partition");
  for (int a : p.assignment)
    if (a < 0 || a >= graph.size()) throw Error("inconsistent partition");
}

}  // namespace

Partition partition_by_nearest_node(const EmbeddedGraph& graph,
                                    const Dataset& data) {
  if (graph.dim() != data.dim()) throw Error("dimension mismatch");
  const int n = data.size();
  const int k = graph.size();
  const int d = data.dim();
  Partition p;
  p.assignment.resize(n);
  std::vector<double> sq(n);
  kernels::nearest_node(data.data(), n, graph.positions_data(), k, d,
                        p.assignment.data(), sq.data());
  p.counts.resize(k);
  p.sums.resize(static_cast<std::size_t>(k) * d);
  kernels::partition_sums(data.data(), n, d, p.assignment.data(), k,
                          p.sums.data(), p.counts.data());
  return p;
}

EnergyBreakdown elastic_energy(const EmbeddedGraph& graph, const Dataset& data,
                               const Partition& partition,
                               const ElasticConfig& cfg) {
  check_partition(graph, data, partition);
  const int n = data.size();
  const int d = data.dim();

  std::vector<double> sq(n);
  kernels::assigned_sq_distances(data.data(), n, graph.positions_data(), d,
                                 partition.assignment.data(), sq.data());
  EnergyBreakdown e;
  e.approx = kernels::ordered_sum(sq.data(), n) / n;

  double stretch = 0.0;
  for (const Edge& ed : graph.edges()) {
    auto a = graph.position(ed.a);
    auto b = graph.position(ed.b);
    double s = 0.0;
    for (int c = 0; c < d; ++c) {
      double t = a[c] - b[c];
      s += t * t;
    }
    stretch += s;
  }
  e.stretch = cfg.lambda_stretch * stretch;

  double bend = 0.0;
  auto adj = graph.adjacency();
  for (int v = 0; v < graph.size(); ++v) {
    const int k = static_cast<int>(adj[v].size());
    if (k < 2) continue;
    auto v0 = graph.position(v);
    double s = 0.0;
    for (int c = 0; c < d; ++c) {
      double m = 0.0;
      for (int u : adj[v]) m += graph.position(u)[c];
      double t = m - k * v0[c];
      s += t * t;
    }
    bend += s;
  }
  e.bend = cfg.mu_bend * bend;

  e.total = e.approx + e.stretch + e.bend;
  return e;
}

EmbeddedGraph solve_node_positions(const EmbeddedGraph& graph,
                                   const Dataset& data,
                                   const Partition& partition,
                                   const ElasticConfig& cfg) {
  check_partition(graph, data, partition);
  const int V = graph.size();
  const int d = graph.dim();
  const double n = data.size();

  // Quadratic in the node positions; each coordinate solves the same SPD
  // system A u = b with A = (1/n) diag(counts) + lambda L + mu S^T S.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(V, V);
  for (int j = 0; j < V; ++j) A(j, j) += partition.counts[j] / n;

  for (const Edge& e : graph.edges()) {
    A(e.a, e.a) += cfg.lambda_stretch;
    A(e.b, e.b) += cfg.lambda_stretch;
    A(e.a, e.b) -= cfg.lambda_stretch;
    A(e.b, e.a) -= cfg.lambda_stretch;
  }

  auto adj = graph.adjacency();
  std::vector<std::pair<int, double>> row;
  for (int v = 0; v < V; ++v) {
    const int k = static_cast<int>(adj[v].size());
    if (k < 2) continue;
    row.clear();
    row.emplace_back(v, -static_cast<double>(k));
    for (int u : adj[v]) row.emplace_back(u, 1.0);
    for (const auto& [p, sp] : row)
      for (const auto& [q, sq] : row) A(p, q) += cfg.mu_bend * sp * sq;
  }

  Eigen::MatrixXd B(V, d);
  for (int j = 0; j < V; ++j)
    for (int c = 0; c < d; ++c)
      B(j, c) = partition.sums[static_cast<std::size_t>(j) * d + c] / n;

  Eigen::LLT<Eigen::MatrixXd> llt(A);
  if (llt.info() != Eigen::Success) throw Error("singular elastic system");
  Eigen::MatrixXd X = llt.solve(B);

  EmbeddedGraph out = graph;
  std::vector<double> p(d);
  for (int j = 0; j < V; ++j) {
    for (int c = 0; c < d; ++c) p[c] = X(j, c);
    out.set_position(j, p);
  }
  return out;
}

EmbeddedGraph optimize_graph(const EmbeddedGraph& graph, const Dataset& data,
                             const ElasticConfig& cfg,
                             std::vector<double>* energy_trace) {
  check_config(cfg);
  if (!graph.is_connected()) throw Error("graph must be connected");
  if (data.total_variance() == 0.0) throw DegenerateDataError();

  EmbeddedGraph g = graph;
  Partition p = partition_by_nearest_node(g, data);
  double e = elastic_energy(g, data, p, cfg).total;
  if (energy_trace) energy_trace->push_back(e);

  for (int it = 0; it < cfg.max_optimize_iterations; ++it) {
    g = solve_node_positions(g, data, p, cfg);
    p = partition_by_nearest_node(g, data);
    double e2 = elastic_energy(g, data, p, cfg).total;
    if (energy_trace) energy_trace->push_back(e2);
    double prev = e;
    e = e2;
    if (prev - e2 <= cfg.optimize_tol * prev) break;
  }
  return g;
}

std::string to_string(const GrammarOp& op) {
  switch (op.kind) {
    case GrammarKind::add_leaf:
      return "AddLeaf(" + std::to_string(op.node) + ")";
    case GrammarKind::bisect_edge:
      return "BisectEdge(" + std::to_string(op.edge.a) + "," +
             std::to_string(op.edge.b) + ")";
    case GrammarKind::remove_leaf:
      return "RemoveLeaf(" + std::to_string(op.node) + ")";
    case GrammarKind::contract_edge:
      return "ContractEdge(" + std::to_string(op.edge.a) + "," +
             std::to_string(op.edge.b) + ")";
  }
  return "?";
}

std::vector<GrammarOp> enumerate_grammar(const EmbeddedGraph& graph,
                                         GrammarSet set) {
  std::vector<GrammarOp> out;
  if (set == GrammarSet::growing) {
    for (int v = 0; v < graph.size(); ++v)
      out.push_back({GrammarKind::add_leaf, v, {}});
    for (const Edge& e : graph.edges())
      out.push_back({GrammarKind::bisect_edge, -1, e});
  } else {
    std::vector<int> deg(graph.size(), 0);
    for (const Edge& e : graph.edges()) {
      ++deg[e.a];
      ++deg[e.b];
    }
    for (int v = 0; v < graph.size(); ++v)
      if (deg[v] == 1) out.push_back({GrammarKind::remove_leaf, v, {}});
    for (const Edge& e : graph.edges())
      out.push_back({GrammarKind::contract_edge, -1, e});
  }
  return out;
}

EmbeddedGraph apply_grammar(const EmbeddedGraph& graph, const GrammarOp& op,
                            const GrammarContext& ctx) {
  const int d = graph.dim();
  EmbeddedGraph g = graph;
  switch (op.kind) {
    case GrammarKind::add_leaf: {
      auto nbrs = g.neighbours(op.node);
      auto v = g.position(op.node);
      std::vector<double> p(d);
      if (nbrs.size() == 1) {
        // Mirror the single neighbour through the leaf.
        auto u = g.position(nbrs[0]);
        for (int c = 0; c < d; ++c) p[c] = 2.0 * v[c] - u[c];
      } else if (!nbrs.empty()) {
        std::vector<double> off(d, 0.0);
        for (int c = 0; c < d; ++c) {
          double m = 0.0;
          for (int u : nbrs) m += g.position(u)[c];
          off[c] = v[c] - m / static_cast<double>(nbrs.size());
        }
        bool zero = true;
        for (int c = 0; c < d; ++c)
          if (off[c] != 0.0) zero = false;
        if (zero) {
          if (static_cast<int>(ctx.degenerate_leaf_offset.size()) == d) {
            off = ctx.degenerate_leaf_offset;
          } else {
            off.assign(d, 0.0);
            off[0] = 1e-3;
          }
        }
        for (int c = 0; c < d; ++c) p[c] = v[c] + off[c];
      } else {
        // Isolated node: place the leaf at the fallback offset.
        if (static_cast<int>(ctx.degenerate_leaf_offset.size()) == d) {
          for (int c = 0; c < d; ++c) p[c] = v[c] + ctx.degenerate_leaf_offset[c];
        } else {
          for (int c = 0; c < d; ++c) p[c] = v[c];
          p[0] += 1e-3;
        }
      }
      int nv = g.add_node(p);
      g.add_edge(op.node, nv);
      break;
    }
    case GrammarKind::bisect_edge: {
      if (!g.has_edge(op.edge.a, op.edge.b)) throw Error("no such edge");
      auto a = g.position(op.edge.a);
      auto b = g.position(op.edge.b);
      std::vector<double> mid(d);
      for (int c = 0; c < d; ++c) mid[c] = 0.5 * (a[c] + b[c]);
      g.remove_edge(op.edge.a, op.edge.b);
      int m = g.add_node(mid);
      g.add_edge(op.edge.a, m);
      g.add_edge(op.edge.b, m);
      break;
    }
    case GrammarKind::remove_leaf: {
      if (g.degree(op.node) != 1) throw Error("node is not a leaf");
      g.remove_node(op.node);
      break;
    }
    case GrammarKind::contract_edge: {
      if (!g.has_edge(op.edge.a, op.edge.b)) throw Error("no such edge");
      const int keep = std::min(op.edge.a, op.edge.b);
      const int drop = std::max(op.edge.a, op.edge.b);
      auto a = g.position(keep);
      auto b = g.position(drop);
      std::vector<double> mid(d);
      for (int c = 0; c < d; ++c) mid[c] = 0.5 * (a[c] + b[c]);
      g.set_position(keep, mid);
      for (int u : g.neighbours(drop)) {
        if (u == keep) continue;
        if (!g.has_edge(keep, u)) g.add_edge(keep, u);
      }
      g.remove_node(drop);
      break;
    }
  }
  return g;
}

double score_candidate(const EmbeddedGraph& graph, const GrammarOp& op,
                       const Dataset& data, const ElasticConfig& cfg,
                       const GrammarContext& ctx) {
  EmbeddedGraph g = apply_grammar(graph, op, ctx);
  Partition p = partition_by_nearest_node(g, data);
  g = solve_node_positions(g, data, p, cfg);
  p = partition_by_nearest_node(g, data);
  return elastic_energy(g, data, p, cfg).total;
}

PtResult fit_principal_tree(const Dataset& data, const ElasticConfig& cfg) {
  check_config(cfg);
  if (data.size() < 2 || data.total_variance() == 0.0)
    throw DegenerateDataError();
  const auto t_start = std::chrono::steady_clock::now();
  const int d = data.dim();

  PrincipalAxis pc = first_principal_component(data);
  EmbeddedGraph g(d);
  std::vector<double> p(d);
  for (int c = 0; c < d; ++c)
    p[c] = data.mean()[c] - pc.sigma * pc.line.direction[c];
  g.add_node(p);
  for (int c = 0; c < d; ++c)
    p[c] = data.mean()[c] + pc.sigma * pc.line.direction[c];
  g.add_node(p);
  g.add_edge(0, 1);

  GrammarContext ctx;
  ctx.degenerate_leaf_offset.resize(d);
  for (int c = 0; c < d; ++c)
    ctx.degenerate_leaf_offset[c] =
        1e-3 * data.diameter() * pc.line.direction[c];

  PtResult result{EmbeddedGraph(d), {}, {}};
  FitStatus status = FitStatus::stalled;
  double final_fvu = 0.0;
  int stage = 1;

  for (int outer = 1; outer <= cfg.max_outer_iterations; ++outer) {
    g = optimize_graph(g, data, cfg);
    double fvu = fvu_graph(data, g);
    final_fvu = fvu;
    if (fvu <= cfg.fvu_threshold) {
      status = FitStatus::converged;
      break;
    }
    if (outer == cfg.max_outer_iterations) break;  // stalled

    GrammarSet set =
        stage < 4 ? GrammarSet::growing : GrammarSet::shrinking;
    std::vector<GrammarOp> cands = enumerate_grammar(g, set);
    if (cands.empty()) break;  // nothing applicable: stalled

    std::vector<double> scores(cands.size());
    const int n_cands = static_cast<int>(cands.size());
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_cands; ++i)
      scores[i] = score_candidate(g, cands[i], data, cfg, ctx);

    // Ties resolve to the earliest candidate in enumeration order.
    int best = 0;
    for (int i = 1; i < n_cands; ++i)
      if (scores[i] < scores[best]) best = i;

    g = apply_grammar(g, cands[best], ctx);
    result.trace.push_back({stage, cands[best], fvu, scores[best], g.size()});
    stage = stage < 4 ? stage + 1 : 1;
  }

  result.graph = g;
  result.report.method = "PT";
  result.report.fvu = final_fvu;
  result.report.status = status;
  fill_measures(result.report, g);
  result.report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

}  // namespace graphfit

#include "graphfit/gsom.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "graphfit/accuracy.hpp"
#include "graphfit/error.hpp"
#include "graphfit/kernels.hpp"

namespace graphfit {

namespace {

void check_config(const SomConfig& cfg) {
  if (cfg.neighbourhood_radius <= 0.0) throw Error("radius must be positive");
  if (cfg.fvu_threshold <= 0.0 || cfg.fvu_threshold >= 1.0)
    throw Error("fvu threshold must lie in (0, 1)");
  if (cfg.max_batch_iterations < 1 || cfg.max_nodes < 2 ||
      cfg.convergence_tol <= 0.0)
    throw Error("bad SOM configuration");
}

// FVU of a polygonal line given as a flat coordinate array.
double chain_coords_fvu(const double* coords, int k, const Dataset& data) {
  std::vector<int> edge_pairs;
  edge_pairs.reserve(2 * (k - 1));
  for (int i = 0; i + 1 < k; ++i) {
    edge_pairs.push_back(i);
    edge_pairs.push_back(i + 1);
  }
  std::vector<double> sq(data.size());
  kernels::graph_sq_distances(data.data(), data.size(), coords, data.dim(),
                              edge_pairs.data(), k - 1, nullptr, 0, sq.data());
  return kernels::ordered_sum(sq.data(), data.size()) / data.total_variance();
}

double chain_fvu(const Chain& chain, const Dataset& data) {
  if (data.total_variance() == 0.0) throw DegenerateDataError();
  return chain_coords_fvu(chain.data(), chain.size(), data);
}

}  // namespace

Chain Chain::from_nodes(std::vector<double> coords, int dim) {
  if (dim < 1 || coords.size() % dim != 0) throw Error("dimension mismatch");
  Chain c(dim);
  c.coords_ = std::move(coords);
  return c;
}

void Chain::set_node(int i, std::span<const double> p) {
  std::copy(p.begin(), p.end(),
            coords_.begin() + static_cast<std::size_t>(i) * dim_);
}

void Chain::push_front(std::span<const double> p) {
  coords_.insert(coords_.begin(), p.begin(), p.end());
}

void Chain::push_back(std::span<const double> p) {
  coords_.insert(coords_.end(), p.begin(), p.end());
}

EmbeddedGraph Chain::as_graph() const {
  EmbeddedGraph g(dim_);
  for (int i = 0; i < size(); ++i) g.add_node(node(i));
  for (int i = 0; i + 1 < size(); ++i) g.add_edge(i, i + 1);
  return g;
}

double neighbourhood_weight(int grid_distance, double radius) {
  return std::max(0.0, 1.0 - grid_distance / radius);
}

Chain batch_som_step(const Chain& chain, const Dataset& data,
                     const SomConfig& cfg) {
  const int k = chain.size();
  if (k < 2) throw Error("chain must have at least 2 nodes");
  if (chain.dim() != data.dim()) throw Error("dimension mismatch");
  const int n = data.size();
  const int d = data.dim();

  std::vector<int> bmu(n);
  std::vector<double> bmu_sq(n);
  kernels::nearest_node(data.data(), n, chain.data(), k, d, bmu.data(),
                        bmu_sq.data());

  std::vector<double> sums(static_cast<std::size_t>(k) * d);
  std::vector<double> weights(k);
  kernels::som_accumulate(data.data(), n, d, bmu.data(), k,
                          cfg.neighbourhood_radius, sums.data(),
                          weights.data());

  Chain out = chain;
  std::vector<double> p(d);
  for (int j = 0; j < k; ++j) {
    if (weights[j] <= 0.0) continue;  // keep the previous position
    for (int c = 0; c < d; ++c)
      p[c] = sums[static_cast<std::size_t>(j) * d + c] / weights[j];
    out.set_node(j, p);
  }
  return out;
}

Chain batch_som_optimize(const Chain& chain, const Dataset& data,
                         const SomConfig& cfg) {
  check_config(cfg);
  const double tol = cfg.convergence_tol * data.diameter();
  const int d = chain.dim();
  Chain cur = chain;
  for (int it = 0; it < cfg.max_batch_iterations; ++it) {
    Chain next = batch_som_step(cur, data, cfg);
    double max_disp = 0.0;
    for (int j = 0; j < cur.size(); ++j) {
      double s = 0.0;
      for (int c = 0; c < d; ++c) {
        double t = next.node(j)[c] - cur.node(j)[c];
        s += t * t;
      }
      max_disp = std::max(max_disp, std::sqrt(s));
    }
    // Returning the pre-step chain makes the fixed-point property exact:
    // re-applying the update moves no node beyond the tolerance.
    if (max_disp <= tol) return cur;
    cur = std::move(next);
  }
  return cur;
}

GrowthCandidates grow_candidates(const Chain& chain, const Dataset& data) {
  const int k = chain.size();
  if (k < 2) throw Error("chain must have at least 2 nodes");
  const int d = chain.dim();

  GrowthCandidates out;
  out.cfvu = chain_fvu(chain, data);

  out.front_node.resize(d);
  out.back_node.resize(d);
  for (int c = 0; c < d; ++c) {
    out.front_node[c] = 2.0 * chain.node(0)[c] - chain.node(1)[c];
    out.back_node[c] = 2.0 * chain.node(k - 1)[c] - chain.node(k - 2)[c];
  }

  std::vector<double> ext(static_cast<std::size_t>(k + 1) * d);
  std::copy(out.front_node.begin(), out.front_node.end(), ext.begin());
  std::copy(chain.data(), chain.data() + static_cast<std::size_t>(k) * d,
            ext.begin() + d);
  out.bfvu = chain_coords_fvu(ext.data(), k + 1, data);

  std::copy(chain.data(), chain.data() + static_cast<std::size_t>(k) * d,
            ext.begin());
  std::copy(out.back_node.begin(), out.back_node.end(),
            ext.begin() + static_cast<std::size_t>(k) * d);
  out.efvu = chain_coords_fvu(ext.data(), k + 1, data);
  return out;
}

GsomResult fit_gsom(const Dataset& data, const SomConfig& cfg) {
  check_config(cfg);
  if (data.size() < 2 || data.total_variance() == 0.0)
    throw DegenerateDataError();
  const auto t_start = std::chrono::steady_clock::now();
  const int d = data.dim();
  const double nan = std::numeric_limits<double>::quiet_NaN();

  PrincipalAxis pc = first_principal_component(data);
  std::vector<double> init(2 * static_cast<std::size_t>(d));
  for (int c = 0; c < d; ++c) {
    init[c] = data.mean()[c] - pc.sigma * pc.line.direction[c];
    init[d + c] = data.mean()[c] + pc.sigma * pc.line.direction[c];
  }
  Chain chain = Chain::from_nodes(std::move(init), d);

  GsomResult result{Chain(d), {}, {}};
  FitStatus status = FitStatus::stalled;
  double final_fvu = 0.0;

  for (;;) {
    chain = batch_som_optimize(chain, data, cfg);
    double cfvu = chain_fvu(chain, data);
    final_fvu = cfvu;
    if (cfvu <= cfg.fvu_threshold) {
      result.trace.push_back(
          {chain.size(), cfvu, nan, nan, GsomAction::converged});
      status = FitStatus::converged;
      break;
    }
    if (chain.size() >= cfg.max_nodes) {
      result.trace.push_back(
          {chain.size(), cfvu, nan, nan, GsomAction::stalled});
      break;
    }
    GrowthCandidates cand = grow_candidates(chain, data);
    if (cand.bfvu < cand.efvu && cand.bfvu < cfvu) {
      result.trace.push_back(
          {chain.size(), cfvu, cand.bfvu, cand.efvu, GsomAction::grew_front});
      chain.push_front(cand.front_node);
    } else if (cand.efvu <= cand.bfvu && cand.efvu < cfvu) {
      // Ties between the two candidates grow at the back.
      result.trace.push_back(
          {chain.size(), cfvu, cand.bfvu, cand.efvu, GsomAction::grew_back});
      chain.push_back(cand.back_node);
    } else {
      result.trace.push_back(
          {chain.size(), cfvu, cand.bfvu, cand.efvu, GsomAction::stalled});
      break;
    }
  }

  result.chain = chain;
  result.report.method = "GSOM";
  result.report.fvu = final_fvu;
  result.report.status = status;
  fill_measures(result.report, chain.as_graph());
  result.report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t_start)
          .count();
  return result;
}

}  // namespace graphfit

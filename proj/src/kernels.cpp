#include "graphfit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <limits>

namespace graphfit::kernels {

namespace {

Backend g_backend =
#ifdef _OPENMP
    Backend::parallel;
#else
    Backend::serial;
#endif

inline double sq_dist(const double* a, const double* b, int d) {
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    double t = a[c] - b[c];
    s += t * t;
  }
  return s;
}

inline double sq_dist_segment(const double* x, const double* a,
                              const double* b, int d) {
  double ab2 = 0.0;
  double ax = 0.0;
  for (int c = 0; c < d; ++c) {
    double e = b[c] - a[c];
    ab2 += e * e;
    ax += (x[c] - a[c]) * e;
  }
  if (ab2 == 0.0) return sq_dist(x, a, d);
  double t = std::clamp(ax / ab2, 0.0, 1.0);
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    double diff = x[c] - (a[c] + t * (b[c] - a[c]));
    s += diff * diff;
  }
  return s;
}

// Per-element bodies shared by both backends, so the flavours cannot drift.
inline void nearest_node_at(const double* pts, const double* nodes, int k,
                            int d, int i, int* out_id, double* out_sq) {
  const double* x = pts + static_cast<std::size_t>(i) * d;
  int best = 0;
  double best_sq = sq_dist(x, nodes, d);
  for (int j = 1; j < k; ++j) {
    double s = sq_dist(x, nodes + static_cast<std::size_t>(j) * d, d);
    if (s < best_sq) {  // strict: ties keep the lowest id
      best_sq = s;
      best = j;
    }
  }
  out_id[i] = best;
  out_sq[i] = best_sq;
}

inline void graph_sq_distance_at(const double* pts, const double* nodes, int d,
                                 const int* edge_pairs, int n_edges,
                                 const int* site_nodes, int n_sites, int i,
                                 double* out_sq) {
  const double* x = pts + static_cast<std::size_t>(i) * d;
  double best = std::numeric_limits<double>::infinity();
  for (int e = 0; e < n_edges; ++e) {
    const double* a = nodes + static_cast<std::size_t>(edge_pairs[2 * e]) * d;
    const double* b =
        nodes + static_cast<std::size_t>(edge_pairs[2 * e + 1]) * d;
    best = std::min(best, sq_dist_segment(x, a, b, d));
  }
  for (int s = 0; s < n_sites; ++s) {
    const double* a = nodes + static_cast<std::size_t>(site_nodes[s]) * d;
    best = std::min(best, sq_dist(x, a, d));
  }
  out_sq[i] = best;
}

// Node-major accumulation: every node scans the points in index order, so
// the additions into its sums happen in the same order as in the serial
// reference no matter how nodes are scheduled across threads.
inline void som_accumulate_node(const double* pts, int n, int d,
                                const int* bmu, double radius, int j,
                                double* sums, double* weights) {
  double* row = sums + static_cast<std::size_t>(j) * d;
  for (int c = 0; c < d; ++c) row[c] = 0.0;
  double w = 0.0;
  for (int i = 0; i < n; ++i) {
    double h = 1.0 - std::abs(bmu[i] - j) / radius;
    if (h <= 0.0) continue;
    w += h;
    const double* x = pts + static_cast<std::size_t>(i) * d;
    for (int c = 0; c < d; ++c) row[c] += h * x[c];
  }
  weights[j] = w;
}

inline void partition_sums_node(const double* pts, int n, int d,
                                const int* assign, int j, double* sums,
                                int* counts) {
  double* row = sums + static_cast<std::size_t>(j) * d;
  for (int c = 0; c < d; ++c) row[c] = 0.0;
  int m = 0;
  for (int i = 0; i < n; ++i) {
    if (assign[i] != j) continue;
    ++m;
    const double* x = pts + static_cast<std::size_t>(i) * d;
    for (int c = 0; c < d; ++c) row[c] += x[c];
  }
  counts[j] = m;
}

}  // namespace

Backend active_backend() { return g_backend; }

void set_backend(Backend b) { g_backend = b; }

bool compiled_with_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

double ordered_sum(const double* v, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += v[i];
  return s;
}

namespace serial {

void nearest_node(const double* pts, int n, const double* nodes, int k, int d,
                  int* out_id, double* out_sq) {
  for (int i = 0; i < n; ++i) nearest_node_at(pts, nodes, k, d, i, out_id, out_sq);
}

void graph_sq_distances(const double* pts, int n, const double* nodes, int d,
                        const int* edge_pairs, int n_edges,
                        const int* site_nodes, int n_sites, double* out_sq) {
  for (int i = 0; i < n; ++i)
    graph_sq_distance_at(pts, nodes, d, edge_pairs, n_edges, site_nodes,
                         n_sites, i, out_sq);
}

void assigned_sq_distances(const double* pts, int n, const double* nodes,
                           int d, const int* assign, double* out_sq) {
  for (int i = 0; i < n; ++i)
    out_sq[i] = sq_dist(pts + static_cast<std::size_t>(i) * d,
                        nodes + static_cast<std::size_t>(assign[i]) * d, d);
}

void som_accumulate(const double* pts, int n, int d, const int* bmu, int k,
                    double radius, double* sums, double* weights) {
  for (int j = 0; j < k; ++j)
    som_accumulate_node(pts, n, d, bmu, radius, j, sums, weights);
}

void partition_sums(const double* pts, int n, int d, const int* assign, int k,
                    double* sums, int* counts) {
  for (int j = 0; j < k; ++j)
    partition_sums_node(pts, n, d, assign, j, sums, counts);
}

}  // namespace serial

namespace parallel {

void nearest_node(const double* pts, int n, const double* nodes, int k, int d,
                  int* out_id, double* out_sq) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) nearest_node_at(pts, nodes, k, d, i, out_id, out_sq);
}

void graph_sq_distances(const double* pts, int n, const double* nodes, int d,
                        const int* edge_pairs, int n_edges,
                        const int* site_nodes, int n_sites, double* out_sq) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    graph_sq_distance_at(pts, nodes, d, edge_pairs, n_edges, site_nodes,
                         n_sites, i, out_sq);
}

void assigned_sq_distances(const double* pts, int n, const double* nodes,
                           int d, const int* assign, double* out_sq) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i)
    out_sq[i] = sq_dist(pts + static_cast<std::size_t>(i) * d,
                        nodes + static_cast<std::size_t>(assign[i]) * d, d);
}

void som_accumulate(const double* pts, int n, int d, const int* bmu, int k,
                    double radius, double* sums, double* weights) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < k; ++j)
    som_accumulate_node(pts, n, d, bmu, radius, j, sums, weights);
}

void partition_sums(const double* pts, int n, int d, const int* assign, int k,
                    double* sums, int* counts) {
#pragma omp parallel for schedule(static)
  for (int j = 0; j < k; ++j)
    partition_sums_node(pts, n, d, assign, j, sums, counts);
}

}  // namespace parallel

void nearest_node(const double* pts, int n, const double* nodes, int k, int d,
                  int* out_id, double* out_sq) {
  if (g_backend == Backend::parallel)
    parallel::nearest_node(pts, n, nodes, k, d, out_id, out_sq);
  else
    serial::nearest_node(pts, n, nodes, k, d, out_id, out_sq);
}

void graph_sq_distances(const double* pts, int n, const double* nodes, int d,
                        const int* edge_pairs, int n_edges,
                        const int* site_nodes, int n_sites, double* out_sq) {
  if (g_backend == Backend::parallel)
    parallel::graph_sq_distances(pts, n, nodes, d, edge_pairs, n_edges,
                                 site_nodes, n_sites, out_sq);
  else
    serial::graph_sq_distances(pts, n, nodes, d, edge_pairs, n_edges,
                               site_nodes, n_sites, out_sq);
}

void assigned_sq_distances(const double* pts, int n, const double* nodes,
                           int d, const int* assign, double* out_sq) {
  if (g_backend == Backend::parallel)
    parallel::assigned_sq_distances(pts, n, nodes, d, assign, out_sq);
  else
    serial::assigned_sq_distances(pts, n, nodes, d, assign, out_sq);
}

void som_accumulate(const double* pts, int n, int d, const int* bmu, int k,
                    double radius, double* sums, double* weights) {
  if (g_backend == Backend::parallel)
    parallel::som_accumulate(pts, n, d, bmu, k, radius, sums, weights);
  else
    serial::som_accumulate(pts, n, d, bmu, k, radius, sums, weights);
}

void partition_sums(const double* pts, int n, int d, const int* assign, int k,
                    double* sums, int* counts) {
  if (g_backend == Backend::parallel)
    parallel::partition_sums(pts, n, d, assign, k, sums, counts);
  else
    serial::partition_sums(pts, n, d, assign, k, sums, counts);
}

}  // namespace graphfit::kernels

#pragma once

// Data-parallel inner loops shared by the fitters and the accuracy measures.
// Every kernel exists in a serial reference flavour and an OpenMP flavour.
// The two are bitwise-identical by construction: parallel loops run only
// over independent output slots (points or nodes), and every floating-point
// reduction happens in a fixed index order. Results therefore do not depend
// on the number of threads.

namespace graphfit::kernels {

enum class Backend { serial, parallel };

Backend active_backend();
void set_backend(Backend b);
bool compiled_with_openmp();

// Sum of v[0..n) accumulated in index order.
double ordered_sum(const double* v, int n);

namespace serial {

// Per point: id of the nearest of k nodes (ties to the lowest id) and the
// squared distance to it.
void nearest_node(const double* pts, int n, const double* nodes, int k, int d,
                  int* out_id, double* out_sq);

// Per point: squared distance to the union of closed edge segments;
// site_nodes lists node ids treated as degenerate (point) segments.
void graph_sq_distances(const double* pts, int n, const double* nodes, int d,
                        const int* edge_pairs, int n_edges,
                        const int* site_nodes, int n_sites, double* out_sq);

// Per point: squared distance to its assigned node.
void assigned_sq_distances(const double* pts, int n, const double* nodes,
                           int d, const int* assign, double* out_sq);

// Batch-SOM accumulation on a 1-D grid: per-node weighted coordinate sums
// and total weights under the triangular kernel max(0, 1 - |g - j|/radius).
void som_accumulate(const double* pts, int n, int d, const int* bmu, int k,
                    double radius, double* sums, double* weights);

// Per-node coordinate sums and member counts of a node assignment.
void partition_sums(const double* pts, int n, int d, const int* assign, int k,
                    double* sums, int* counts);

}  // namespace serial

namespace parallel {

void nearest_node(const double* pts, int n, const double* nodes, int k, int d,
                  int* out_id, double* out_sq);
void graph_sq_distances(const double* pts, int n, const double* nodes, int d,
                        const int* edge_pairs, int n_edges,
                        const int* site_nodes, int n_sites, double* out_sq);
void assigned_sq_distances(const double* pts, int n, const double* nodes,
                           int d, const int* assign, double* out_sq);
void som_accumulate(const double* pts, int n, int d, const int* bmu, int k,
                    double radius, double* sums, double* weights);
void partition_sums(const double* pts, int n, int d, const int* assign, int k,
                    double* sums, int* counts);

}  // namespace parallel

// Dispatchers: route to the active backend.
void nearest_node(const double* pts, int n, const double* nodes, int k, int d,
                  int* out_id, double* out_sq);
void graph_sq_distances(const double* pts, int n, const double* nodes, int d,
                        const int* edge_pairs, int n_edges,
                        const int* site_nodes, int n_sites, double* out_sq);
void assigned_sq_distances(const double* pts, int n, const double* nodes,
                           int d, const int* assign, double* out_sq);
void som_accumulate(const double* pts, int n, int d, const int* bmu, int k,
                    double radius, double* sums, double* weights);
void partition_sums(const double* pts, int n, int d, const int* assign, int k,
                    double* sums, int* counts);

}  // namespace graphfit::kernels

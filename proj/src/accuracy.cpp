#include "graphfit/accuracy.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "graphfit/error.hpp"
#include "graphfit/kernels.hpp"

namespace graphfit {

namespace {

void check_same_dim(std::size_t a, std::size_t b) {
  if (a != b) throw Error("dimension mismatch");
}

}  // namespace

double point_to_segment_sq_distance(std::span<const double> x,
                                    std::span<const double> a,
                                    std::span<const double> b) {
  check_same_dim(x.size(), a.size());
  check_same_dim(x.size(), b.size());
  const int d = static_cast<int>(x.size());
  double ab2 = 0.0, ax = 0.0;
  for (int c = 0; c < d; ++c) {
    double e = b[c] - a[c];
    ab2 += e * e;
    ax += (x[c] - a[c]) * e;
  }
  double t = ab2 == 0.0 ? 0.0 : std::clamp(ax / ab2, 0.0, 1.0);
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    double diff = x[c] - (a[c] + t * (b[c] - a[c]));
    s += diff * diff;
  }
  return s;
}

double point_to_segment_distance(std::span<const double> x,
                                 std::span<const double> a,
                                 std::span<const double> b) {
  return std::sqrt(point_to_segment_sq_distance(x, a, b));
}

double fvu_line(const Dataset& data, const Line& line) {
  if (data.total_variance() == 0.0) throw DegenerateDataError();
  check_same_dim(line.base.size(), static_cast<std::size_t>(data.dim()));
  check_same_dim(line.direction.size(), static_cast<std::size_t>(data.dim()));
  const int d = data.dim();
  double numer = 0.0;
  for (int i = 0; i < data.size(); ++i) {
    auto x = data.point(i);
    double proj = 0.0, norm2 = 0.0;
    for (int c = 0; c < d; ++c) {
      double r = x[c] - line.base[c];
      proj += r * line.direction[c];
      norm2 += r * r;
    }
    // ||r||^2 - (r . u)^2 for unit u; clamp rounding below zero.
    numer += std::max(0.0, norm2 - proj * proj);
  }
  return numer / data.total_variance();
}

double fvu_graph(const Dataset& data, const EmbeddedGraph& graph) {
  if (graph.size() < 1) throw Error("graph has no nodes");
  if (graph.dim() != data.dim()) throw Error("dimension mismatch");
  if (data.total_variance() == 0.0) throw DegenerateDataError();

  std::vector<int> edge_pairs;
  edge_pairs.reserve(graph.edges().size() * 2);
  for (const Edge& e : graph.edges()) {
    edge_pairs.push_back(e.a);
    edge_pairs.push_back(e.b);
  }
  // Nodes not covered by any edge are scored as point sites.
  std::vector<int> sites;
  if (graph.edges().empty()) {
    for (int v = 0; v < graph.size(); ++v) sites.push_back(v);
  } else {
    std::vector<int> deg(graph.size(), 0);
    for (const Edge& e : graph.edges()) {
      ++deg[e.a];
      ++deg[e.b];
    }
    for (int v = 0; v < graph.size(); ++v)
      if (deg[v] == 0) sites.push_back(v);
  }

  std::vector<double> sq(data.size());
  kernels::graph_sq_distances(data.data(), data.size(), graph.positions_data(),
                              data.dim(), edge_pairs.data(),
                              static_cast<int>(edge_pairs.size() / 2),
                              sites.data(), static_cast<int>(sites.size()),
                              sq.data());
  return kernels::ordered_sum(sq.data(), data.size()) / data.total_variance();
}

PrincipalAxis first_principal_component(const Dataset& data) {
  if (data.size() < 2 || data.total_variance() == 0.0)
    throw DegenerateDataError();
  const int d = data.dim();
  const int n = data.size();
  const auto& mean = data.mean();

  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < n; ++i) {
    auto x = data.point(i);
    for (int r = 0; r < d; ++r)
      for (int c = r; c < d; ++c)
        cov(r, c) += (x[r] - mean[r]) * (x[c] - mean[c]);
  }
  for (int r = 0; r < d; ++r)
    for (int c = r; c < d; ++c) {
      cov(r, c) /= n;
      cov(c, r) = cov(r, c);
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
  if (es.info() != Eigen::Success) throw Error("eigen decomposition failed");
  // Eigen returns eigenvalues in ascending order.
  Eigen::VectorXd v = es.eigenvectors().col(d - 1);
  double lambda = std::max(0.0, es.eigenvalues()(d - 1));

  int imax = 0;
  for (int c = 1; c < d; ++c)
    if (std::abs(v(c)) > std::abs(v(imax))) imax = c;
  if (v(imax) < 0) v = -v;

  PrincipalAxis axis;
  axis.line.base = mean;
  axis.line.direction.assign(v.data(), v.data() + d);
  axis.sigma = std::sqrt(lambda);
  return axis;
}

}  // namespace graphfit

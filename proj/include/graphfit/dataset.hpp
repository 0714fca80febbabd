#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace graphfit {

// Componentwise mean of a point list and the total variance about it,
// sum_i ||x_i - mean||^2. Throws on an empty list or mixed dimensions.
std::pair<std::vector<double>, double> mean_and_variance(
    const std::vector<std::vector<double>>& points);

// Immutable point cloud with cached mean, total variance and bounding-box
// diagonal. Coordinates are stored row-major (point index major), so the
// kernels can walk them contiguously.
class Dataset {
public:
  static Dataset from_points(const std::vector<std::vector<double>>& points);
  static Dataset from_flat(std::vector<double> coords, int dim);

  // CSV with a header row x1,...,xd and one point per row.
  static Dataset load_csv(const std::string& path);
  void save_csv(const std::string& path) const;

  int size() const { return n_; }
  int dim() const { return dim_; }
  std::span<const double> point(int i) const {
    return {coords_.data() + static_cast<std::size_t>(i) * dim_,
            static_cast<std::size_t>(dim_)};
  }
  const double* data() const { return coords_.data(); }
  const std::vector<double>& mean() const { return mean_; }
  double total_variance() const { return total_variance_; }

  // Bounding-box diagonal: the length scale used for relative convergence
  // thresholds and degenerate-offset fallbacks.
  double diameter() const { return diameter_; }

private:
  Dataset() = default;

  int n_ = 0;
  int dim_ = 0;
  std::vector<double> coords_;
  std::vector<double> mean_;
  double total_variance_ = 0.0;
  double diameter_ = 0.0;
};

}  // namespace graphfit

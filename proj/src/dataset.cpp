#include "graphfit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "graphfit/error.hpp"

namespace graphfit {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::pair<std::vector<double>, double> mean_and_variance(
    const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw Error("empty dataset");
  const std::size_t d = points.front().size();
  if (d == 0) throw Error("dimension mismatch");
  for (const auto& p : points)
    if (p.size() != d) throw Error("dimension mismatch");

  std::vector<double> mean(d, 0.0);
  for (const auto& p : points)
    for (std::size_t c = 0; c < d; ++c) mean[c] += p[c];
  for (std::size_t c = 0; c < d; ++c) mean[c] /= static_cast<double>(points.size());

  double var = 0.0;
  for (const auto& p : points) {
    double s = 0.0;
    for (std::size_t c = 0; c < d; ++c) {
      double t = p[c] - mean[c];
      s += t * t;
    }
    var += s;
  }
  return {std::move(mean), var};
}

Dataset Dataset::from_points(const std::vector<std::vector<double>>& points) {
  auto [mean, var] = mean_and_variance(points);
  Dataset ds;
  ds.n_ = static_cast<int>(points.size());
  ds.dim_ = static_cast<int>(points.front().size());
  ds.coords_.reserve(points.size() * mean.size());
  for (const auto& p : points) ds.coords_.insert(ds.coords_.end(), p.begin(), p.end());
  ds.mean_ = std::move(mean);
  ds.total_variance_ = var;

  std::vector<double> lo(ds.dim_), hi(ds.dim_);
  for (int c = 0; c < ds.dim_; ++c) lo[c] = hi[c] = ds.coords_[c];
  for (int i = 1; i < ds.n_; ++i)
    for (int c = 0; c < ds.dim_; ++c) {
      double v = ds.coords_[static_cast<std::size_t>(i) * ds.dim_ + c];
      lo[c] = std::min(lo[c], v);
      hi[c] = std::max(hi[c], v);
    }
  double diag = 0.0;
  for (int c = 0; c < ds.dim_; ++c) {
    double t = hi[c] - lo[c];
    diag += t * t;
  }
  ds.diameter_ = std::sqrt(diag);
  return ds;
}

Dataset Dataset::from_flat(std::vector<double> coords, int dim) {
  if (dim < 1) throw Error("dimension mismatch");
  if (coords.empty() || coords.size() % dim != 0) throw Error("empty dataset");
  std::vector<std::vector<double>> pts(coords.size() / dim);
  for (std::size_t i = 0; i < pts.size(); ++i)
    pts[i].assign(coords.begin() + i * dim, coords.begin() + (i + 1) * dim);
  return from_points(pts);
}

Dataset Dataset::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);
  std::string line;
  if (!std::getline(in, line)) throw Error("empty dataset");

  // Header row fixes the dimension; column names are not interpreted.
  std::size_t dim = 1;
  for (char ch : line)
    if (ch == ',') ++dim;

  std::vector<std::vector<double>> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> p;
    p.reserve(dim);
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        throw IoError(path + ":" + std::to_string(line_no) + ": bad number '" +
                      cell + "'");
      }
      p.push_back(v);
    }
    if (p.size() != dim) throw Error("dimension mismatch");
    points.push_back(std::move(p));
  }
  return from_points(points);
}

void Dataset::save_csv(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write dataset file: " + path);
  for (int c = 0; c < dim_; ++c) {
    if (c) out << ',';
    out << 'x' << (c + 1);
  }
  out << '\n';
  for (int i = 0; i < n_; ++i) {
    for (int c = 0; c < dim_; ++c) {
      if (c) out << ',';
      out << format_double(coords_[static_cast<std::size_t>(i) * dim_ + c]);
    }
    out << '\n';
  }
  if (!out) throw IoError("cannot write dataset file: " + path);
}

}  // namespace graphfit

// Timing comparison of the serial reference kernels against the OpenMP
// flavours, plus an exactness check: both must agree bit for bit.
//
// Usage: bench_kernels [n_points] [n_nodes] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "graphfit/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = clock_type::now();
    fn();
    auto t1 = clock_type::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms < best) best = ms;
  }
  return best;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 200000;
  const int k = argc > 2 ? std::atoi(argv[2]) : 96;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;
  const int d = 2;

  std::mt19937_64 gen(7);
  auto u = [&] { return (gen() >> 11) * 0x1.0p-53; };

  std::vector<double> pts(static_cast<std::size_t>(n) * d);
  for (double& v : pts) v = u() * 10.0;
  std::vector<double> nodes(static_cast<std::size_t>(k) * d);
  for (double& v : nodes) v = u() * 10.0;
  std::vector<int> edges;
  for (int j = 0; j + 1 < k; ++j) {
    edges.push_back(j);
    edges.push_back(j + 1);
  }

  std::vector<int> id_s(n), id_p(n);
  std::vector<double> sq_s(n), sq_p(n);
  std::vector<double> sums_s(static_cast<std::size_t>(k) * d), sums_p(sums_s);
  std::vector<double> w_s(k), w_p(k);
  std::vector<int> cnt_s(k), cnt_p(k);

  namespace gk = graphfit::kernels;
  std::printf("n=%d nodes=%d dim=%d repeats=%d (openmp %s)\n", n, k, d, repeats,
              gk::compiled_with_openmp() ? "on" : "off");
  std::printf("%-22s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  bool ok = true;
  auto report = [&](const char* name, double ts, double tp, bool match) {
    std::printf("%-22s %12.3f %12.3f %8.2fx%s\n", name, ts, tp, ts / tp,
                match ? "" : "  MISMATCH");
    ok = ok && match;
  };

  {
    double ts = run_ms([&] { gk::serial::nearest_node(pts.data(), n, nodes.data(), k, d, id_s.data(), sq_s.data()); }, repeats);
    double tp = run_ms([&] { gk::parallel::nearest_node(pts.data(), n, nodes.data(), k, d, id_p.data(), sq_p.data()); }, repeats);
    report("nearest_node", ts, tp, bitwise_equal(sq_s, sq_p) && id_s == id_p);
  }
  {
    double ts = run_ms([&] { gk::serial::graph_sq_distances(pts.data(), n, nodes.data(), d, edges.data(), k - 1, nullptr, 0, sq_s.data()); }, repeats);
    double tp = run_ms([&] { gk::parallel::graph_sq_distances(pts.data(), n, nodes.data(), d, edges.data(), k - 1, nullptr, 0, sq_p.data()); }, repeats);
    report("graph_sq_distances", ts, tp, bitwise_equal(sq_s, sq_p));
  }
  {
    double ts = run_ms([&] { gk::serial::assigned_sq_distances(pts.data(), n, nodes.data(), d, id_s.data(), sq_s.data()); }, repeats);
    double tp = run_ms([&] { gk::parallel::assigned_sq_distances(pts.data(), n, nodes.data(), d, id_p.data(), sq_p.data()); }, repeats);
    report("assigned_sq_distances", ts, tp, bitwise_equal(sq_s, sq_p));
  }
  {
    double ts = run_ms([&] { gk::serial::som_accumulate(pts.data(), n, d, id_s.data(), k, 3.0, sums_s.data(), w_s.data()); }, repeats);
    double tp = run_ms([&] { gk::parallel::som_accumulate(pts.data(), n, d, id_p.data(), k, 3.0, sums_p.data(), w_p.data()); }, repeats);
    report("som_accumulate", ts, tp, bitwise_equal(sums_s, sums_p) && bitwise_equal(w_s, w_p));
  }
  {
    double ts = run_ms([&] { gk::serial::partition_sums(pts.data(), n, d, id_s.data(), k, sums_s.data(), cnt_s.data()); }, repeats);
    double tp = run_ms([&] { gk::parallel::partition_sums(pts.data(), n, d, id_p.data(), k, sums_p.data(), cnt_p.data()); }, repeats);
    report("partition_sums", ts, tp, bitwise_equal(sums_s, sums_p) && cnt_s == cnt_p);
  }

  if (!ok) {
    std::printf("serial/parallel outputs diverged\n");
    return 1;
  }
  return 0;
}

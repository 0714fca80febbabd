#include "graphfit/embedded_graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "graphfit/error.hpp"

namespace graphfit {

EmbeddedGraph::EmbeddedGraph(int dim) : dim_(dim) {
  if (dim < 1) throw Error("dimension mismatch");
}

void EmbeddedGraph::check_node(int v) const {
  if (v < 0 || v >= n_) throw Error("unknown node id " + std::to_string(v));
}

int EmbeddedGraph::add_node(std::span<const double> p) {
  if (static_cast<int>(p.size()) != dim_) throw Error("dimension mismatch");
  pos_.insert(pos_.end(), p.begin(), p.end());
  return n_++;
}

std::span<const double> EmbeddedGraph::position(int v) const {
  check_node(v);
  return {pos_.data() + static_cast<std::size_t>(v) * dim_,
          static_cast<std::size_t>(dim_)};
}

void EmbeddedGraph::set_position(int v, std::span<const double> p) {
  check_node(v);
  if (static_cast<int>(p.size()) != dim_) throw Error("dimension mismatch");
  std::copy(p.begin(), p.end(), pos_.begin() + static_cast<std::size_t>(v) * dim_);
}

void EmbeddedGraph::add_edge(int a, int b) {
  check_node(a);
  check_node(b);
  if (a == b) throw Error("self loops are not allowed");
  Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) throw Error("duplicate edge");
  edges_.insert(it, e);
}

bool EmbeddedGraph::has_edge(int a, int b) const {
  Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EmbeddedGraph::remove_edge(int a, int b) {
  Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) throw Error("no such edge");
  edges_.erase(it);
}

void EmbeddedGraph::remove_node(int v) {
  check_node(v);
  pos_.erase(pos_.begin() + static_cast<std::size_t>(v) * dim_,
             pos_.begin() + static_cast<std::size_t>(v + 1) * dim_);
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (Edge e : edges_) {
    if (e.a == v || e.b == v) continue;
    if (e.a > v) --e.a;
    if (e.b > v) --e.b;
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  edges_ = std::move(kept);
  --n_;
}

int EmbeddedGraph::degree(int v) const {
  check_node(v);
  int deg = 0;
  for (const Edge& e : edges_)
    if (e.a == v || e.b == v) ++deg;
  return deg;
}

std::vector<int> EmbeddedGraph::neighbours(int v) const {
  check_node(v);
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> EmbeddedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  // Edges are sorted, so each adjacency list comes out ascending.
  for (const Edge& e : edges_) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

bool EmbeddedGraph::is_connected() const {
  if (n_ == 0) return false;
  auto adj = adjacency();
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++visited;
        stack.push_back(u);
      }
    }
  }
  return visited == n_;
}

bool EmbeddedGraph::is_tree() const {
  return is_connected() && static_cast<int>(edges_.size()) == n_ - 1;
}

std::string EmbeddedGraph::to_json() const {
  nlohmann::json j;
  j["dimension"] = dim_;
  auto nodes = nlohmann::json::array();
  for (int v = 0; v < n_; ++v) {
    auto row = nlohmann::json::array();
    for (int c = 0; c < dim_; ++c)
      row.push_back(pos_[static_cast<std::size_t>(v) * dim_ + c]);
    nodes.push_back(std::move(row));
  }
  j["nodes"] = std::move(nodes);
  auto edges = nlohmann::json::array();
  for (const Edge& e : edges_) edges.push_back({e.a, e.b});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

EmbeddedGraph EmbeddedGraph::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.contains("dimension") || !j.contains("nodes") || !j.contains("edges"))
    throw IoError("bad graph JSON: missing dimension/nodes/edges");
  EmbeddedGraph g(j["dimension"].get<int>());
  for (const auto& row : j["nodes"]) {
    std::vector<double> p = row.get<std::vector<double>>();
    g.add_node(p);
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw IoError("bad graph JSON: edge");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  return g;
}

void EmbeddedGraph::save_json(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write graph file: " + path);
  out << to_json();
  if (!out) throw IoError("cannot write graph file: " + path);
}

EmbeddedGraph EmbeddedGraph::load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string Barcode::render() const {
  std::string out;
  for (std::size_t i = 0; i < star_counts.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(star_counts[i]);
  }
  out += "||";
  out += std::to_string(node_count);
  return out;
}

Star star_of(const EmbeddedGraph& graph, int node) {
  return Star{node, graph.neighbours(node)};
}

double graph_length(const EmbeddedGraph& graph) {
  double total = 0.0;
  int d = graph.dim();
  for (const Edge& e : graph.edges()) {
    auto a = graph.position(e.a);
    auto b = graph.position(e.b);
    double s = 0.0;
    for (int c = 0; c < d; ++c) {
      double t = a[c] - b[c];
      s += t * t;
    }
    total += std::sqrt(s);
  }
  return total;
}

double star_nonharmonicity(const EmbeddedGraph& graph, int node) {
  auto leaves = graph.neighbours(node);
  const int k = static_cast<int>(leaves.size());
  // 1-stars are harmonic by convention.
  if (k <= 1) return 0.0;
  int d = graph.dim();
  auto v0 = graph.position(node);
  double s = 0.0;
  for (int c = 0; c < d; ++c) {
    double m = 0.0;
    for (int u : leaves) m += graph.position(u)[c];
    double t = v0[c] - m / k;
    s += t * t;
  }
  return s;
}

double geometrical_complexity(const EmbeddedGraph& graph) {
  const int n = graph.size();
  if (n < 1) throw Error("graph has no nodes");
  auto adj = graph.adjacency();
  int d = graph.dim();
  double sum = 0.0;
  for (int v = 0; v < n; ++v) {
    const auto& leaves = adj[v];
    const int k = static_cast<int>(leaves.size());
    if (k <= 1) continue;
    auto v0 = graph.position(v);
    double s = 0.0;
    for (int c = 0; c < d; ++c) {
      double m = 0.0;
      for (int u : leaves) m += graph.position(u)[c];
      double t = v0[c] - m / k;
      s += t * t;
    }
    sum += s;
  }
  return static_cast<double>(n) * static_cast<double>(n) * sum;
}

Barcode structural_barcode(const EmbeddedGraph& graph, int min_max_order) {
  const int n = graph.size();
  int k_max = std::max(min_max_order, 3);
  std::vector<int> deg(n, 0);
  for (const Edge& e : graph.edges()) {
    ++deg[e.a];
    ++deg[e.b];
  }
  for (int v = 0; v < n; ++v) k_max = std::max(k_max, deg[v]);
  Barcode bc;
  bc.k_max = k_max;
  bc.star_counts.assign(k_max - 2, 0);
  for (int v = 0; v < n; ++v)
    if (deg[v] >= 3) ++bc.star_counts[k_max - deg[v]];
  bc.node_count = n;
  return bc;
}

int node_count(const EmbeddedGraph& graph) { return graph.size(); }

}  // namespace graphfit

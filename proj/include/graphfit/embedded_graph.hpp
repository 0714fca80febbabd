#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace graphfit {

struct Edge {
  int a = -1;
  int b = -1;  // invariant: a < b

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph whose nodes carry positions in data space.
// Node ids are dense integers 0..n-1; removing a node shifts the ids above
// it down by one. Edges are kept sorted, which fixes every enumeration
// order used elsewhere (grammar candidates, adjacency lists, JSON output).
class EmbeddedGraph {
public:
  explicit EmbeddedGraph(int dim);

  int dim() const { return dim_; }
  int size() const { return n_; }

  int add_node(std::span<const double> p);
  std::span<const double> position(int v) const;
  void set_position(int v, std::span<const double> p);
  const double* positions_data() const { return pos_.data(); }

  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  void remove_edge(int a, int b);
  // Removes the node, its incident edges, and renumbers ids above v.
  void remove_node(int v);

  const std::vector<Edge>& edges() const { return edges_; }
  int degree(int v) const;
  // Neighbour ids in ascending order.
  std::vector<int> neighbours(int v) const;
  std::vector<std::vector<int>> adjacency() const;

  bool is_connected() const;
  bool is_tree() const;

  // JSON object { "dimension": d, "nodes": [[coords]...], "edges": [[i,j]...] }
  // with i < j; node order defines ids.
  std::string to_json() const;
  static EmbeddedGraph parse_json(const std::string& text);
  void save_json(const std::string& path) const;
  static EmbeddedGraph load_json(const std::string& path);

private:
  void check_node(int v) const;

  int dim_ = 0;
  int n_ = 0;
  std::vector<double> pos_;  // n_ x dim_, row-major
  std::vector<Edge> edges_;  // sorted, unique, a < b
};

// A node together with its graph neighbours.
struct Star {
  int center = -1;
  std::vector<int> leaves;

  int degree() const { return static_cast<int>(leaves.size()); }
};

// Counts of k-stars for k from k_max down to 3, plus the node count.
// Rendered as "c_kmax|...|c3||N".
struct Barcode {
  int k_max = 3;
  std::vector<int> star_counts;  // index 0 holds the k_max count
  int node_count = 0;

  std::string render() const;
};

Star star_of(const EmbeddedGraph& graph, int node);
double graph_length(const EmbeddedGraph& graph);

// Squared deviation of the star center from the mean of its leaves;
// zero for stars of degree <= 1.
double star_nonharmonicity(const EmbeddedGraph& graph, int node);

// n^2 times the summed non-harmonicity over all nodes, n = node count.
double geometrical_complexity(const EmbeddedGraph& graph);

Barcode structural_barcode(const EmbeddedGraph& graph, int min_max_order = 3);
int node_count(const EmbeddedGraph& graph);

}  // namespace graphfit

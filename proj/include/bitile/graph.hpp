#ifndef BITILE_GRAPH_HPP
#define BITILE_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bitile/rational.hpp"

namespace bitile {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using Edge = std::pair<int, int>;

// One connected component of a pattern, with its unique proper 2-coloring
// normalized so the W side is the larger one.
struct ComponentColoring {
  std::vector<int> u_side;  // smaller color class (ties resolved by normalization)
  std::vector<int> w_side;  // larger color class, |w_side| >= |u_side|
  int c() const { return static_cast<int>(u_side.size() + w_side.size()); }
  int d() const { return static_cast<int>(w_side.size() - u_side.size()); }
};

// The pattern H: immutable after construction.
class TileGraph {
 public:
  // Discovers components, 2-colors them (throws NotBipartite with an odd
  // cycle witness otherwise) and orders components canonically: decreasing
  // c, then decreasing d, then lexicographically by sorted degree sequence.
  static TileGraph build(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return h_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<ComponentColoring>& components() const { return components_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int a, int b) const;

  std::vector<int> component_sizes() const;       // c_i in canonical order
  std::vector<int> component_imbalances() const;  // d_i in canonical order

 private:
  TileGraph() = default;
  int h_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<ComponentColoring> components_;
};

// Balanced bipartite host G[X, Y]; immutable after construction.
class HostGraph {
 public:
  // Edges are (x_index, y_index) pairs, both 0-based within their side.
  static HostGraph build(int side_size, const std::vector<Edge>& edges);

  int n() const { return n_; }
  long long edge_count() const { return edge_count_; }
  int min_degree() const { return min_degree_; }
  int degree_x(int x) const { return static_cast<int>(adj_x_[x].count()); }
  int degree_y(int y) const { return static_cast<int>(adj_y_[y].count()); }
  bool adjacent(int x, int y) const { return adj_x_[x].test(y); }
  const Bitset& row_x(int x) const { return adj_x_[x]; }  // neighbors of x in Y
  const Bitset& row_y(int y) const { return adj_y_[y]; }  // neighbors of y in X

  // Edge count and exact density between A subset of X and B subset of Y.
  long long edges_between(const std::vector<int>& xs, const std::vector<int>& ys) const;
  Rational density(const std::vector<int>& xs, const std::vector<int>& ys) const;
  Rational density() const;  // d(X, Y)

  // Host with the same vertex set plus extra edges (duplicates ignored).
  HostGraph with_edges(const std::vector<Edge>& extra) const;
  std::vector<Edge> edges() const;

 private:
  HostGraph() = default;
  int n_ = 0;
  long long edge_count_ = 0;
  int min_degree_ = 0;
  std::vector<Bitset> adj_x_;
  std::vector<Bitset> adj_y_;
};

}  // namespace bitile

#endif

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "robnash/errors.hpp"

namespace robnash {

using Node = std::size_t;

struct Arc {
  Node target;
  double weight;
};

/// Weighted graph on nodes 0..n-1 stored as sorted out-adjacency lists.
/// Undirected graphs store both orientations with equal weights.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t num_nodes, bool directed);

  /// Adds (i, j), and (j, i) when undirected. Rejects self-loops, duplicate
  /// edges and negative or non-finite weights.
  void add_edge(Node i, Node j, double weight = 1.0);

  std::size_t num_nodes() const { return adjacency_.size(); }
  bool directed() const { return directed_; }
  /// Number of stored (directed) arcs.
  std::size_t num_arcs() const;

  /// Out-neighbourhood N_i, sorted by target.
  std::span<const Arc> neighbors(Node i) const { return adjacency_.at(i); }
  bool has_edge(Node i, Node j) const;
  /// W_ij, zero if absent.
  double weight(Node i, Node j) const;
  /// |N_i|
  std::size_t degree(Node i) const { return adjacency_.at(i).size(); }

  /// |N_i n R| where `in_set` flags membership in R.
  std::size_t split_degree(Node i, const std::vector<bool>& in_set) const;

  /// Connectivity ignoring orientation.
  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<Arc>> adjacency_;
  bool directed_ = false;
};

/// Flags nodes of `subset`, validating indices.
std::vector<bool> membership(std::size_t num_nodes, std::span<const Node> subset);

namespace graphs {

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Center 0 with leaves 1..n-1.
Graph star(std::size_t n);

}  // namespace graphs

}  // namespace robnash

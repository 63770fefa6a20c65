#include "robnash/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace robnash {

Graph::Graph(std::size_t num_nodes, bool directed)
    : adjacency_(num_nodes), directed_(directed) {}

void Graph::add_edge(Node i, Node j, double weight) {
  if (i >= num_nodes() || j >= num_nodes()) {
    throw InputError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") references a node outside 0.." + std::to_string(num_nodes()) + "-1");
  }
  if (i == j) throw InputError("self-loop at node " + std::to_string(i));
  if (!std::isfinite(weight) || weight < 0.0) {
    throw InputError("edge weights must be finite and nonnegative");
  }
  if (has_edge(i, j)) {
    throw InputError("duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  auto insert = [&](Node a, Node b) {
    auto& list = adjacency_[a];
    auto pos = std::lower_bound(list.begin(), list.end(), b,
                                [](const Arc& arc, Node t) { return arc.target < t; });
    list.insert(pos, Arc{b, weight});
  };
  insert(i, j);
  if (!directed_) insert(j, i);
}

std::size_t Graph::num_arcs() const {
  std::size_t n = 0;
  for (const auto& l : adjacency_) n += l.size();
  return n;
}

bool Graph::has_edge(Node i, Node j) const {
  const auto& list = adjacency_.at(i);
  return std::binary_search(list.begin(), list.end(), Arc{j, 0.0},
                            [](const Arc& a, const Arc& b) { return a.target < b.target; });
}

double Graph::weight(Node i, Node j) const {
  for (const auto& arc : adjacency_.at(i)) {
    if (arc.target == j) return arc.weight;
  }
  return 0.0;
}

std::size_t Graph::split_degree(Node i, const std::vector<bool>& in_set) const {
  std::size_t n = 0;
  for (const auto& arc : adjacency_.at(i)) n += in_set.at(arc.target) ? 1 : 0;
  return n;
}

bool Graph::connected() const {
  if (num_nodes() == 0) return true;
  std::vector<std::vector<Node>> undirected(num_nodes());
  for (Node i = 0; i < num_nodes(); ++i) {
    for (const auto& arc : adjacency_[i]) {
      undirected[i].push_back(arc.target);
      undirected[arc.target].push_back(i);
    }
  }
  std::vector<bool> seen(num_nodes(), false);
  std::vector<Node> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Node v = stack.back();
    stack.pop_back();
    for (Node w : undirected[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == num_nodes();
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.directed_ != b.directed_ || a.adjacency_.size() != b.adjacency_.size()) return false;
  for (std::size_t i = 0; i < a.adjacency_.size(); ++i) {
    const auto& la = a.adjacency_[i];
    const auto& lb = b.adjacency_[i];
    if (la.size() != lb.size()) return false;
    for (std::size_t k = 0; k < la.size(); ++k) {
      if (la[k].target != lb[k].target || la[k].weight != lb[k].weight) return false;
    }
  }
  return true;
}

std::vector<bool> membership(std::size_t num_nodes, std::span<const Node> subset) {
  std::vector<bool> in(num_nodes, false);
  for (Node v : subset) {
    if (v >= num_nodes) throw InputError("node " + std::to_string(v) + " does not exist");
    if (in[v]) throw InputError("node " + std::to_string(v) + " listed twice");
    in[v] = true;
  }
  return in;
}

namespace graphs {

Graph path(std::size_t n) {
  Graph g(n, false);
  for (Node i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 nodes");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n, false);
  for (Node i = 0; i < n; ++i) {
    for (Node j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star(std::size_t n) {
  Graph g(n, false);
  for (Node i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace graphs

}  // namespace robnash

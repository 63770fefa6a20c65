#pragma once

// Test-only generators and brute-force oracles. The oracles index utility
// tables with their own mixed-radix arithmetic and never call the library's
// deviation-margin or equilibrium routines.

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "robnash/game.hpp"
#include "robnash/graph.hpp"
#include "robnash/subgames.hpp"

namespace robnash::testing {

/// Decodes index -> action vector with player 0 most significant.
inline std::vector<std::size_t> oracle_decode(std::uint64_t index,
                                              const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> out(counts.size());
  for (std::size_t k = counts.size(); k-- > 0;) {
    out[k] = index % counts[k];
    index /= counts[k];
  }
  return out;
}

inline std::uint64_t oracle_encode(const std::vector<std::size_t>& x,
                                   const std::vector<std::size_t>& counts) {
  std::uint64_t index = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) index = index * counts[k] + x[k];
  return index;
}

/// Nash by definition: no player strictly gains by a unilateral switch.
inline bool oracle_is_nash(const FiniteGame& g, const std::vector<std::size_t>& x) {
  const auto& counts = g.space().action_counts();
  const auto here = oracle_encode(x, counts);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t a = 0; a < counts[i]; ++a) {
      auto y = x;
      y[i] = a;
      if (g.table(i)[oracle_encode(y, counts)] > g.table(i)[here]) return false;
    }
  }
  return true;
}

inline std::set<std::vector<std::size_t>> oracle_nash_set(const FiniteGame& g) {
  std::set<std::vector<std::size_t>> out;
  const auto& counts = g.space().action_counts();
  std::uint64_t n = 1;
  for (auto c : counts) n *= c;
  for (std::uint64_t k = 0; k < n; ++k) {
    const auto x = oracle_decode(k, counts);
    if (oracle_is_nash(g, x)) out.insert(x);
  }
  return out;
}

/// min over y ~_i x, y != x of u_i(x) - u_i(y), by direct lookup.
inline double oracle_chi(const FiniteGame& g, const std::vector<std::size_t>& x, std::size_t i) {
  const auto& counts = g.space().action_counts();
  const double here = g.table(i)[oracle_encode(x, counts)];
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < counts[i]; ++a) {
    if (a == x[i]) continue;
    auto y = x;
    y[i] = a;
    best = std::min(best, here - g.table(i)[oracle_encode(y, counts)]);
  }
  return best;
}

/// Equal up to 1e-12 relative rounding; infinite margins must match exactly.
inline bool same_margin(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Random game with 1..max_players players and 1..max_actions actions each,
/// at least one player having two or more actions. Half of the games use
/// small integer payoffs so ties and non-strict equilibria occur.
inline FiniteGame random_game(std::mt19937_64& gen, std::size_t max_players = 4,
                              std::size_t max_actions = 3) {
  std::uniform_int_distribution<std::size_t> np(1, max_players);
  std::uniform_int_distribution<std::size_t> na(1, max_actions);
  std::vector<std::size_t> counts(np(gen));
  for (auto& c : counts) c = na(gen);
  if (std::all_of(counts.begin(), counts.end(), [](auto c) { return c == 1; })) counts[0] = 2;
  std::uint64_t n = 1;
  for (auto c : counts) n *= c;
  const bool integer = gen() % 2 == 0;
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  std::vector<std::vector<double>> u(counts.size(), std::vector<double>(n));
  for (auto& t : u) {
    for (auto& v : t) v = integer ? small(gen) : real(gen);
  }
  return FiniteGame(counts, u);
}

/// Random exact potential game: u_i(x) = phi(x) + g_i(x_{-i}).
inline FiniteGame random_potential_game(std::mt19937_64& gen, std::size_t max_players = 4,
                                        std::size_t max_actions = 3) {
  const auto shape = random_game(gen, max_players, max_actions);
  const auto& counts = shape.space().action_counts();
  const auto n = shape.profile_count();
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  std::vector<double> phi(n);
  for (auto& v : phi) v = real(gen);
  std::vector<std::vector<double>> u(counts.size(), std::vector<double>(n));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    // g_i depends on x_{-i} only: key by the profile with x_i zeroed.
    std::vector<double> others(n);
    for (auto& v : others) v = real(gen);
    for (std::uint64_t k = 0; k < n; ++k) {
      auto x = oracle_decode(k, counts);
      x[i] = 0;
      u[i][k] = phi[k] + others[oracle_encode(x, counts)];
    }
  }
  return FiniteGame(counts, u);
}

/// Players in R get a random payoff in x_R plus a coupling term in x.
inline FiniteGame weakly_coupled(std::mt19937_64& gen, const FiniteGame& shape, const PartitionContext& ctx,
                          double coupling) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto tables = shape.tables();
  const auto& rs = ctx.restricted_space();
  std::vector<std::vector<double>> core(shape.num_players(), std::vector<double>(rs.size()));
  for (auto& t : core) {
    for (auto& v : t) v = 2.0 * unit(gen);
  }
  for (ProfileIndex k = 0; k < shape.profile_count(); ++k) {
    const auto y = ctx.split(shape.space().decode(k)).first;
    for (Player i : ctx.restricted()) tables[i][k] = core[i][rs.encode(y)] + coupling * unit(gen);
  }
  return FiniteGame(shape.space().action_counts(), tables);
}

/// Erdos-Renyi graph, optionally forced connected by adding a random spanning tree.
inline Graph random_graph(std::mt19937_64& gen, std::size_t n, double p, bool connected) {
  Graph g(n, false);
  std::bernoulli_distribution edge(p);
  if (connected) {
    for (std::size_t v = 1; v < n; ++v) {
      std::uniform_int_distribution<std::size_t> parent(0, v - 1);
      g.add_edge(parent(gen), v);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.has_edge(i, j) && edge(gen)) g.add_edge(i, j);
    }
  }
  return g;
}

/// Grows a random seed set until every member has at least as many
/// neighbours inside as outside. May return the whole node set.
inline std::vector<Node> grow_cohesive(std::mt19937_64& gen, const Graph& g,
                                       std::vector<bool> in) {
  for (;;) {
    std::vector<Node> violators;
    for (Node i = 0; i < g.num_nodes(); ++i) {
      if (!in[i]) continue;
      std::size_t inside = 0;
      for (const auto& arc : g.neighbors(i)) inside += in[arc.target] ? 1 : 0;
      if (inside < g.degree(i) - inside) violators.push_back(i);
    }
    if (violators.empty()) break;
    const Node v = violators[gen() % violators.size()];
    std::vector<Node> outside;
    for (const auto& arc : g.neighbors(v)) {
      if (!in[arc.target]) outside.push_back(arc.target);
    }
    in[outside[gen() % outside.size()]] = true;
  }
  std::vector<Node> out;
  for (Node i = 0; i < g.num_nodes(); ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

/// Maximal independent sets by subset enumeration, as 0/1 action vectors.
inline std::set<std::vector<std::size_t>> maximal_independent_sets(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](std::size_t v) { return (mask >> v) & 1; };
    bool independent = true;
    bool maximal = true;
    for (std::size_t v = 0; v < n; ++v) {
      bool has_member_neighbor = false;
      for (const auto& arc : g.neighbors(v)) has_member_neighbor |= in(arc.target) != 0;
      if (in(v) && has_member_neighbor) independent = false;
      if (!in(v) && !has_member_neighbor) maximal = false;
    }
    if (independent && maximal) {
      std::vector<std::size_t> x(n);
      for (std::size_t v = 0; v < n; ++v) x[v] = in(v);
      out.insert(x);
    }
  }
  return out;
}

inline std::set<std::vector<std::size_t>> as_set(const std::vector<StrategyProfile>& xs) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& x : xs) out.insert(x.actions());
  return out;
}

}  // namespace robnash::testing

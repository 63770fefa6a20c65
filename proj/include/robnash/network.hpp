#pragma once

// Network games: pairwise-separable games on graphs, the coordination /
// anti-coordination family, cohesive sets, the coupling screen between a
// block and its complement, potential maximization on a block, and the
// constructive equilibrium for mixed coordination/anti-coordination games.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "robnash/game.hpp"
#include "robnash/graph.hpp"
#include "robnash/subgames.hpp"

namespace robnash {

/// Two-player payoff u_ij(a, b), row-major over A_i x A_j.
struct EdgeTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  EdgeTable() = default;
  EdgeTable(std::size_t r, std::size_t c, std::vector<double> v);

  double operator()(Action a, Action b) const { return values[a * cols + b]; }
  double norm() const;

  friend bool operator==(const EdgeTable&, const EdgeTable&) = default;
};

/// Binary-action labels: index 0 is -1, index 1 is +1.
inline int spin_of(Action a) { return a == 0 ? -1 : 1; }
inline Action action_of_spin(int s) { return s < 0 ? 0 : 1; }

/// xi_i = +1 for coordinating nodes, -1 for anti-coordinating ones.
class SpinAssignment {
 public:
  SpinAssignment() = default;
  explicit SpinAssignment(std::vector<int> xi);
  static SpinAssignment constant(std::size_t n, int value);

  std::size_t size() const { return xi_.size(); }
  int operator[](Node i) const { return xi_[i]; }
  const std::vector<int>& values() const { return xi_; }
  std::vector<Node> coordinating() const;
  std::vector<Node> anti_coordinating() const;
  bool is_constant() const;

  friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;

 private:
  std::vector<int> xi_;
};

/// Game with u_i(x) = sum over j in N_i of u_ij(x_i, x_j). Utilities are
/// evaluated on demand; `to_finite_game` realizes dense tables.
class PairwiseNetworkGame {
 public:
  /// `tables[i][k]` is the table of the k-th out-neighbour of i (sorted order).
  PairwiseNetworkGame(Graph graph, std::vector<std::size_t> action_counts,
                      std::vector<std::vector<EdgeTable>> tables,
                      std::optional<SpinAssignment> spins = std::nullopt);

  const Graph& graph() const { return graph_; }
  const std::vector<std::size_t>& action_counts() const { return counts_; }
  std::size_t num_players() const { return counts_.size(); }
  ProfileSpace space() const { return ProfileSpace(counts_); }
  const std::optional<SpinAssignment>& spins() const { return spins_; }

  const EdgeTable& edge_table(Node i, std::size_t k) const { return tables_[i][k]; }
  const std::vector<std::vector<EdgeTable>>& tables() const { return tables_; }
  /// Table of arc (i, j); throws InputError if the arc is absent.
  const EdgeTable& table(Node i, Node j) const;

  double utility(Player i, const StrategyProfile& x) const;
  /// u_i(x) with x_i replaced by a.
  double utility_if(Player i, const StrategyProfile& x, Action a) const;
  double deviation_margin(Player i, const StrategyProfile& x) const;
  bool is_nash(const StrategyProfile& x, double tolerance = 0.0) const;

  FiniteGame to_finite_game(std::uint64_t budget = kDefaultProfileBudget) const;

  /// max over arcs (i, j) with i in R and j outside R of ||u_ij||.
  double cross_bound(const std::vector<bool>& in_r) const;

 private:
  Graph graph_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<EdgeTable>> tables_;
  std::optional<SpinAssignment> spins_;
};

/// Builds a pairwise game from one table per stored arc. Throws InputError
/// if an arc has no table, a table has no arc or a table has the wrong shape.
PairwiseNetworkGame build_pairwise(const Graph& graph, std::vector<std::size_t> action_counts,
                                   const std::map<std::pair<Node, Node>, EdgeTable>& tables);

/// u_i(x) = xi_i * sum_j W_ij x_i x_j on an undirected graph.
PairwiseNetworkGame coord_anticoord(const Graph& graph, const SpinAssignment& xi);

/// sign/2 * sum_{i,j} W_ij x_i x_j over X: the potential of the pure
/// coordination (sign = +1) or anti-coordination (sign = -1) game.
std::vector<double> coordination_potential(const Graph& graph, int sign,
                                           std::uint64_t budget = kDefaultProfileBudget);

/// Best-shot public good game: 1 - c when contributing, 1 when a neighbour
/// contributes, else 0. Actions are {0, 1}. Requires 0 < c < 1.
FiniteGame public_good_game(const Graph& graph, double c,
                            std::uint64_t budget = kDefaultProfileBudget);

/// Symmetric 2x2 game with action 0 = defect (-1), 1 = cooperate (+1):
/// u_1(-1,-1) = a, u_1(-1,+1) = c, u_1(+1,-1) = d, u_1(+1,+1) = b.
/// Requires c > b > a > d.
FiniteGame prisoners_dilemma(double a, double b, double c, double d);

struct CohesionResult {
  bool cohesive = false;
  std::vector<Node> nodes;
  /// |N_i n R| - |N_i \ R| per node of R, in `nodes` order.
  std::vector<long long> slack;
};

/// Every node of R has at least as many neighbours inside R as outside.
CohesionResult is_cohesive(const Graph& graph, std::span<const Node> subset);

enum class CouplingThreshold {
  /// M * w_i^S
  kNominal,
  /// 4 M * w_i^S, the factor the averaging bound supports unconditionally.
  kConservative,
  /// 2 ||u_i - avg_i||, computed exactly.
  kExact,
};

std::string to_string(CouplingThreshold t);

/// chi^avg_i(y) for i in R, computed locally from the edge tables.
std::vector<double> averaged_deviation_margins(const PairwiseNetworkGame& game,
                                               const PartitionContext& ctx,
                                               const StrategyProfile& y);

/// ||u_i - avg_i|| for i in R, computed in closed form from the edge tables.
std::vector<double> averaged_distances(const PairwiseNetworkGame& game,
                                       const PartitionContext& ctx);

/// Compares chi^avg_i(y) against the chosen threshold for every i in R.
/// Throws DomainError unless y is an equilibrium of the averaged game.
CertificateResult coupling_condition(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                                     const StrategyProfile& y, CouplingThreshold threshold);

/// The game played by the block `ctx.restricted()` when the complement is
/// frozen at z, realized densely.
RestrictedGame freeze_pairwise(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                               const StrategyProfile& z,
                               std::uint64_t budget = kDefaultProfileBudget);

/// Potential of the block game with the complement frozen at z:
/// half the pairwise potentials over internal arcs plus the utilities of
/// arcs leaving the block. Requires an undirected graph whose internal
/// pairs are two-player potential games (DomainError otherwise).
class BlockPotential {
 public:
  BlockPotential(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                 const StrategyProfile& z);

  /// Potential at a profile of the block (ctx.restricted() order).
  double operator()(const StrategyProfile& local) const;
  std::vector<double> table(std::uint64_t budget = kDefaultProfileBudget) const;

 private:
  struct Term {
    std::size_t a;  // local index of the first endpoint
    std::size_t b;  // local index of the second endpoint, or npos when frozen
    Action frozen;  // complement action when b is npos
    EdgeTable values;
    double factor;
  };
  ProfileSpace space_;
  std::vector<Term> terms_;
};

enum class MaximizeMethod { kExhaustive, kBestResponse };

struct PotentialMaximum {
  StrategyProfile profile;
  double potential = 0.0;
  /// Potential after every improving move, starting with the initial profile.
  std::vector<double> trace;
  std::uint64_t sweeps = 0;
};

/// Returns an equilibrium of a potential game. Exhaustive: the lowest-encoded
/// global maximizer. Best-response: round-robin sweeps from a seeded start,
/// each player switching to its lowest-index best action when that strictly
/// improves. DomainError if the game has no exact potential; CapacityError
/// if best response needs more than `max_sweeps` sweeps (default |X|).
PotentialMaximum maximize_restricted_potential(const RestrictedGame& game, MaximizeMethod method,
                                               std::uint64_t seed = 0,
                                               std::optional<std::uint64_t> max_sweeps = {},
                                               std::uint64_t budget = kDefaultProfileBudget);

/// Round-robin best-response descent over an arbitrary utility oracle.
/// `utility(i, x, a)` is player i's payoff for playing a against x_{-i}.
/// `on_move` is invoked after each improving switch.
struct DescentResult {
  StrategyProfile profile;
  std::uint64_t sweeps = 0;
  std::uint64_t moves = 0;
};
DescentResult best_response_descent(
    const std::vector<std::size_t>& action_counts,
    const std::function<double(Player, const StrategyProfile&, Action)>& utility,
    StrategyProfile start, std::uint64_t max_sweeps,
    const std::function<void(const StrategyProfile&)>& on_move = {});

/// A uniformly random profile from a seed.
StrategyProfile seeded_profile(const std::vector<std::size_t>& action_counts,
                               std::uint64_t seed);

struct MixedNashOptions {
  /// Largest |X_{V_a}| solved by exhaustive potential maximization.
  std::uint64_t exhaustive_budget = std::uint64_t{1} << 16;
  std::uint64_t seed = 0;
  std::uint64_t max_sweeps = 1'000'000;
};

enum class MixedNashStatus { kCertified, kNotCohesive, kCouplingFailed };

std::string to_string(MixedNashStatus s);

struct MixedNashOutcome {
  MixedNashStatus status = MixedNashStatus::kNotCohesive;
  int sign = 1;
  /// The assembled equilibrium (actions 0/1 for -1/+1) when certified.
  std::optional<StrategyProfile> profile;
  std::optional<CohesionResult> cohesion;
  std::optional<CertificateResult> coupling;
  /// "exhaustive", "best-response" or "none" (empty anti-coordinating block).
  std::string method = "none";
  /// Block potential at the chosen anti-coordinating profile.
  double block_potential = 0.0;
};

/// Consensus sign * 1 on the coordinating nodes combined with an equilibrium
/// of the anti-coordinating block. Returns a non-certified outcome when the
/// coordinating set is not cohesive or the exact coupling check fails.
/// Throws InvariantViolation if the assembled profile is not an equilibrium.
MixedNashOutcome construct_mixed_nash(const Graph& graph, const SpinAssignment& xi, int sign,
                                      const MixedNashOptions& options = {});

}  // namespace robnash

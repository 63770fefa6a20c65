#include "robnash/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "robnash/nash.hpp"

namespace robnash {

namespace {

constexpr std::size_t kFrozen = std::numeric_limits<std::size_t>::max();

void check_context(const PairwiseNetworkGame& game, const PartitionContext& ctx) {
  if (ctx.full_space().action_counts() != game.action_counts()) {
    throw InputError("partition was built for a different player set");
  }
}

// mean over b of u_ij(a, b)
double row_mean(const EdgeTable& t, Action a) {
  double sum = 0.0;
  for (Action b = 0; b < t.cols; ++b) sum += t(a, b);
  return sum / static_cast<double>(t.cols);
}

double averaged_utility(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                        const std::vector<Action>& full, Player i, Action a) {
  const auto arcs = game.graph().neighbors(i);
  double u = 0.0;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const auto& t = game.edge_table(i, k);
    const Node j = arcs[k].target;
    u += ctx.in_restricted(j) ? t(a, full[j]) : row_mean(t, a);
  }
  return u;
}

std::vector<Action> scatter(const std::vector<Player>& players, const StrategyProfile& local,
                            std::size_t n) {
  std::vector<Action> full(n, 0);
  for (std::size_t k = 0; k < players.size(); ++k) full[players[k]] = local[k];
  return full;
}

}  // namespace

EdgeTable::EdgeTable(std::size_t r, std::size_t c, std::vector<double> v)
    : rows(r), cols(c), values(std::move(v)) {
  if (rows == 0 || cols == 0) throw InputError("edge table must have at least one row and column");
  if (values.size() != rows * cols) {
    throw InputError("edge table has " + std::to_string(values.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  for (double x : values) {
    if (!std::isfinite(x)) throw InputError("edge table contains a non-finite entry");
  }
}

double EdgeTable::norm() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

SpinAssignment::SpinAssignment(std::vector<int> xi) : xi_(std::move(xi)) {
  for (std::size_t i = 0; i < xi_.size(); ++i) {
    if (xi_[i] != 1 && xi_[i] != -1) {
      throw InputError("spin of node " + std::to_string(i) + " must be +1 or -1");
    }
  }
}

SpinAssignment SpinAssignment::constant(std::size_t n, int value) {
  return SpinAssignment(std::vector<int>(n, value));
}

std::vector<Node> SpinAssignment::coordinating() const {
  std::vector<Node> out;
  for (Node i = 0; i < xi_.size(); ++i) {
    if (xi_[i] == 1) out.push_back(i);
  }
  return out;
}

std::vector<Node> SpinAssignment::anti_coordinating() const {
  std::vector<Node> out;
  for (Node i = 0; i < xi_.size(); ++i) {
    if (xi_[i] == -1) out.push_back(i);
  }
  return out;
}

bool SpinAssignment::is_constant() const {
  return std::adjacent_find(xi_.begin(), xi_.end(), std::not_equal_to<>()) == xi_.end();
}

PairwiseNetworkGame::PairwiseNetworkGame(Graph graph, std::vector<std::size_t> action_counts,
                                         std::vector<std::vector<EdgeTable>> tables,
                                         std::optional<SpinAssignment> spins)
    : graph_(std::move(graph)),
      counts_(std::move(action_counts)),
      tables_(std::move(tables)),
      spins_(std::move(spins)) {
  if (counts_.size() != graph_.num_nodes()) {
    throw InputError("need one action count per node");
  }
  if (counts_.empty()) throw InputError("a game needs at least one player");
  for (auto c : counts_) {
    if (c == 0) throw InputError("every player needs at least one action");
  }
  if (tables_.size() != graph_.num_nodes()) throw InputError("need edge tables for every node");
  for (Node i = 0; i < graph_.num_nodes(); ++i) {
    const auto arcs = graph_.neighbors(i);
    if (tables_[i].size() != arcs.size()) {
      throw InputError("node " + std::to_string(i) + " has " + std::to_string(arcs.size()) +
                       " arcs but " + std::to_string(tables_[i].size()) + " edge tables");
    }
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const auto& t = tables_[i][k];
      if (t.rows != counts_[i] || t.cols != counts_[arcs[k].target]) {
        throw InputError("edge table (" + std::to_string(i) + ", " +
                         std::to_string(arcs[k].target) + ") has the wrong shape");
      }
    }
  }
  if (spins_ && spins_->size() != counts_.size()) {
    throw InputError("spin assignment has the wrong length");
  }
}

const EdgeTable& PairwiseNetworkGame::table(Node i, Node j) const {
  const auto arcs = graph_.neighbors(i);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    if (arcs[k].target == j) return tables_[i][k];
  }
  throw InputError("no arc (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

double PairwiseNetworkGame::utility_if(Player i, const StrategyProfile& x, Action a) const {
  const auto arcs = graph_.neighbors(i);
  double u = 0.0;
  for (std::size_t k = 0; k < arcs.size(); ++k) u += tables_[i][k](a, x[arcs[k].target]);
  return u;
}

double PairwiseNetworkGame::utility(Player i, const StrategyProfile& x) const {
  if (i >= num_players()) throw InputError("player " + std::to_string(i) + " does not exist");
  space().validate(x);
  return utility_if(i, x, x[i]);
}

double PairwiseNetworkGame::deviation_margin(Player i, const StrategyProfile& x) const {
  const double here = utility(i, x);
  double chi = std::numeric_limits<double>::infinity();
  for (Action a = 0; a < counts_[i]; ++a) {
    if (a != x[i]) chi = std::min(chi, here - utility_if(i, x, a));
  }
  return chi;
}

bool PairwiseNetworkGame::is_nash(const StrategyProfile& x, double tolerance) const {
  for (Player i = 0; i < num_players(); ++i) {
    if (deviation_margin(i, x) < -tolerance) return false;
  }
  return true;
}

FiniteGame PairwiseNetworkGame::to_finite_game(std::uint64_t budget) const {
  return FiniteGame::from_function(
      counts_, [this](Player i, const StrategyProfile& x) { return utility_if(i, x, x[i]); },
      budget);
}

double PairwiseNetworkGame::cross_bound(const std::vector<bool>& in_r) const {
  double m = 0.0;
  for (Node i = 0; i < graph_.num_nodes(); ++i) {
    if (!in_r.at(i)) continue;
    const auto arcs = graph_.neighbors(i);
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      if (!in_r.at(arcs[k].target)) m = std::max(m, tables_[i][k].norm());
    }
  }
  return m;
}

PairwiseNetworkGame build_pairwise(const Graph& graph, std::vector<std::size_t> action_counts,
                                   const std::map<std::pair<Node, Node>, EdgeTable>& tables) {
  std::vector<std::vector<EdgeTable>> per_node(graph.num_nodes());
  std::size_t used = 0;
  for (Node i = 0; i < graph.num_nodes(); ++i) {
    for (const auto& arc : graph.neighbors(i)) {
      auto it = tables.find({i, arc.target});
      if (it == tables.end()) {
        throw InputError("missing utility table for edge (" + std::to_string(i) + ", " +
                         std::to_string(arc.target) + ")");
      }
      per_node[i].push_back(it->second);
      ++used;
    }
  }
  if (used != tables.size()) throw InputError("utility table given for a pair that is not an edge");
  return PairwiseNetworkGame(graph, std::move(action_counts), std::move(per_node));
}

PairwiseNetworkGame coord_anticoord(const Graph& graph, const SpinAssignment& xi) {
  if (graph.directed()) {
    throw InputError("coordination/anti-coordination games need an undirected graph");
  }
  if (xi.size() != graph.num_nodes()) throw InputError("need one spin per node");
  std::vector<std::vector<EdgeTable>> tables(graph.num_nodes());
  for (Node i = 0; i < graph.num_nodes(); ++i) {
    for (const auto& arc : graph.neighbors(i)) {
      std::vector<double> v(4);
      for (Action a = 0; a < 2; ++a) {
        for (Action b = 0; b < 2; ++b) v[a * 2 + b] = xi[i] * arc.weight * spin_of(a) * spin_of(b);
      }
      tables[i].emplace_back(2, 2, std::move(v));
    }
  }
  return PairwiseNetworkGame(graph, std::vector<std::size_t>(graph.num_nodes(), 2),
                             std::move(tables), xi);
}

std::vector<double> coordination_potential(const Graph& graph, int sign, std::uint64_t budget) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  ProfileSpace space(std::vector<std::size_t>(graph.num_nodes(), 2));
  const auto n = space.size(budget);
  std::vector<double> phi(n, 0.0);
  for (ProfileIndex x = 0; x < n; ++x) {
    double s = 0.0;
    for (Node i = 0; i < graph.num_nodes(); ++i) {
      for (const auto& arc : graph.neighbors(i)) {
        s += arc.weight * spin_of(space.action_at(x, i)) * spin_of(space.action_at(x, arc.target));
      }
    }
    phi[x] = 0.5 * sign * s;
  }
  return phi;
}

FiniteGame public_good_game(const Graph& graph, double c, std::uint64_t budget) {
  if (!(c > 0.0 && c < 1.0)) throw InputError("public good cost must satisfy 0 < c < 1");
  return FiniteGame::from_function(
      std::vector<std::size_t>(graph.num_nodes(), 2),
      [&](Player i, const StrategyProfile& x) {
        if (x[i] == 1) return 1.0 - c;
        for (const auto& arc : graph.neighbors(i)) {
          if (x[arc.target] == 1) return 1.0;
        }
        return 0.0;
      },
      budget);
}

FiniteGame prisoners_dilemma(double a, double b, double c, double d) {
  if (!(c > b && b > a && a > d)) {
    throw InputError("prisoner's dilemma payoffs must satisfy c > b > a > d");
  }
  // Index order (x1, x2): (-1,-1), (-1,+1), (+1,-1), (+1,+1).
  return FiniteGame({2, 2}, {{a, c, d, b}, {a, d, c, b}});
}

CohesionResult is_cohesive(const Graph& graph, std::span<const Node> subset) {
  if (subset.empty()) throw InputError("cohesiveness needs a non-empty node set");
  const auto in = membership(graph.num_nodes(), subset);
  CohesionResult out;
  out.cohesive = true;
  for (Node i = 0; i < graph.num_nodes(); ++i) {
    if (!in[i]) continue;
    const auto inside = static_cast<long long>(graph.split_degree(i, in));
    const auto outside = static_cast<long long>(graph.degree(i)) - inside;
    out.nodes.push_back(i);
    out.slack.push_back(inside - outside);
    if (inside < outside) out.cohesive = false;
  }
  return out;
}

std::string to_string(CouplingThreshold t) {
  switch (t) {
    case CouplingThreshold::kNominal: return "nominal";
    case CouplingThreshold::kConservative: return "conservative";
    case CouplingThreshold::kExact: return "exact";
  }
  return "exact";
}

std::vector<double> averaged_deviation_margins(const PairwiseNetworkGame& game,
                                               const PartitionContext& ctx,
                                               const StrategyProfile& y) {
  check_context(game, ctx);
  ctx.restricted_space().validate(y);
  const auto& r = ctx.restricted();
  const auto full = scatter(r, y, game.num_players());
  std::vector<double> chi(r.size(), std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < r.size(); ++k) {
    const Player i = r[k];
    const double here = averaged_utility(game, ctx, full, i, y[k]);
    for (Action a = 0; a < game.action_counts()[i]; ++a) {
      if (a != y[k]) chi[k] = std::min(chi[k], here - averaged_utility(game, ctx, full, i, a));
    }
  }
  return chi;
}

std::vector<double> averaged_distances(const PairwiseNetworkGame& game,
                                       const PartitionContext& ctx) {
  check_context(game, ctx);
  const auto& r = ctx.restricted();
  std::vector<double> out(r.size(), 0.0);
  // u_i(x) - avg_i(x_R) = sum over outside neighbours j of
  // u_ij(x_i, x_j) - mean_b u_ij(x_i, b); the terms are independent given x_i.
  for (std::size_t k = 0; k < r.size(); ++k) {
    const Player i = r[k];
    const auto arcs = game.graph().neighbors(i);
    for (Action a = 0; a < game.action_counts()[i]; ++a) {
      double up = 0.0;
      double down = 0.0;
      for (std::size_t e = 0; e < arcs.size(); ++e) {
        if (ctx.in_restricted(arcs[e].target)) continue;
        const auto& t = game.edge_table(i, e);
        const double mean = row_mean(t, a);
        double hi = -std::numeric_limits<double>::infinity();
        double lo = std::numeric_limits<double>::infinity();
        for (Action b = 0; b < t.cols; ++b) {
          hi = std::max(hi, t(a, b) - mean);
          lo = std::min(lo, t(a, b) - mean);
        }
        up += hi;
        down += lo;
      }
      out[k] = std::max({out[k], up, -down});
    }
  }
  return out;
}

CertificateResult coupling_condition(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                                     const StrategyProfile& y, CouplingThreshold threshold) {
  const auto chi = averaged_deviation_margins(game, ctx, y);
  for (double c : chi) {
    if (c < 0.0) {
      throw DomainError("profile is not an equilibrium of the averaged game on the block");
    }
  }
  const auto& r = ctx.restricted();
  std::vector<bool> in_r(game.num_players(), false);
  for (Player p : r) in_r[p] = true;
  const double m = game.cross_bound(in_r);

  std::vector<double> limit(r.size(), 0.0);
  if (threshold == CouplingThreshold::kExact) {
    const auto dist = averaged_distances(game, ctx);
    for (std::size_t k = 0; k < r.size(); ++k) limit[k] = 2.0 * dist[k];
  } else {
    const double factor = threshold == CouplingThreshold::kNominal ? 1.0 : 4.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const auto outside = game.graph().degree(r[k]) - game.graph().split_degree(r[k], in_r);
      limit[k] = factor * m * static_cast<double>(outside);
    }
  }

  CertificateResult out;
  out.mode = CertificateMode::kSufficient;
  out.players = r;
  out.nash_of_average = true;
  out.threshold = to_string(threshold);
  out.certified = true;
  out.slack.resize(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    out.slack[k] = chi[k] - limit[k];
    if (!(out.slack[k] >= 0.0)) out.certified = false;
  }
  return out;
}

RestrictedGame freeze_pairwise(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                               const StrategyProfile& z, std::uint64_t budget) {
  check_context(game, ctx);
  ctx.complement_space().validate(z);
  const auto& block = ctx.restricted();
  auto base = scatter(ctx.complement(), z, game.num_players());
  auto rg = FiniteGame::from_function(
      ctx.restricted_space().action_counts(),
      [&](Player k, const StrategyProfile& local) {
        auto full = base;
        for (std::size_t m = 0; m < block.size(); ++m) full[block[m]] = local[m];
        const StrategyProfile x(std::move(full));
        return game.utility_if(block[k], x, x[block[k]]);
      },
      budget);
  return RestrictedGame{std::move(rg), block, Provenance::kFrozen, z};
}

BlockPotential::BlockPotential(const PairwiseNetworkGame& game, const PartitionContext& ctx,
                               const StrategyProfile& z)
    : space_(ctx.restricted_space()) {
  check_context(game, ctx);
  ctx.complement_space().validate(z);
  if (game.graph().directed()) {
    throw DomainError("block potential construction needs an undirected graph");
  }
  const auto& block = ctx.restricted();
  const auto& rest = ctx.complement();
  std::vector<std::size_t> local(game.num_players(), kFrozen);
  std::vector<std::size_t> frozen_pos(game.num_players(), kFrozen);
  for (std::size_t k = 0; k < block.size(); ++k) local[block[k]] = k;
  for (std::size_t k = 0; k < rest.size(); ++k) frozen_pos[rest[k]] = k;

  for (std::size_t k = 0; k < block.size(); ++k) {
    const Player i = block[k];
    const auto arcs = game.graph().neighbors(i);
    for (std::size_t e = 0; e < arcs.size(); ++e) {
      const Node j = arcs[e].target;
      const auto& uij = game.edge_table(i, e);
      if (local[j] == kFrozen) {
        terms_.push_back({k, kFrozen, z[frozen_pos[j]], uij, 1.0});
        continue;
      }
      const auto& uji = game.table(j, i);
      std::vector<double> first(uij.rows * uij.cols);
      std::vector<double> second(uij.rows * uij.cols);
      for (Action a = 0; a < uij.rows; ++a) {
        for (Action b = 0; b < uij.cols; ++b) {
          first[a * uij.cols + b] = uij(a, b);
          second[a * uij.cols + b] = uji(b, a);
        }
      }
      const FiniteGame pair({uij.rows, uij.cols}, {std::move(first), std::move(second)});
      auto cert = check_potential(pair);
      if (!cert.verified) {
        throw DomainError("the two-player game on edge (" + std::to_string(i) + ", " +
                          std::to_string(j) + ") is not a potential game");
      }
      terms_.push_back({k, local[j], 0, EdgeTable(uij.rows, uij.cols, std::move(cert.potential)),
                        0.5});
    }
  }
}

double BlockPotential::operator()(const StrategyProfile& local) const {
  double phi = 0.0;
  for (const auto& t : terms_) {
    const Action other = t.b == kFrozen ? t.frozen : local[t.b];
    phi += t.factor * t.values(local[t.a], other);
  }
  return phi;
}

std::vector<double> BlockPotential::table(std::uint64_t budget) const {
  const auto n = space_.size(budget);
  std::vector<double> out(n);
  for (ProfileIndex x = 0; x < n; ++x) out[x] = (*this)(space_.decode(x));
  return out;
}

DescentResult best_response_descent(
    const std::vector<std::size_t>& action_counts,
    const std::function<double(Player, const StrategyProfile&, Action)>& utility,
    StrategyProfile start, std::uint64_t max_sweeps,
    const std::function<void(const StrategyProfile&)>& on_move) {
  ProfileSpace(action_counts).validate(start);
  DescentResult out{std::move(start), 0, 0};
  std::vector<Action> x = out.profile.actions();
  for (;;) {
    if (out.sweeps == max_sweeps) {
      throw CapacityError("best-response descent did not settle within " +
                          std::to_string(max_sweeps) + " sweeps");
    }
    ++out.sweeps;
    bool moved = false;
    for (Player i = 0; i < action_counts.size(); ++i) {
      const StrategyProfile current(x);
      const double here = utility(i, current, x[i]);
      Action best = 0;
      double best_value = -std::numeric_limits<double>::infinity();
      for (Action a = 0; a < action_counts[i]; ++a) {
        const double v = utility(i, current, a);
        if (v > best_value) {
          best = a;
          best_value = v;
        }
      }
      if (best_value > here) {
        x[i] = best;
        moved = true;
        ++out.moves;
        if (on_move) on_move(StrategyProfile(x));
      }
    }
    if (!moved) break;
  }
  out.profile = StrategyProfile(std::move(x));
  return out;
}

StrategyProfile seeded_profile(const std::vector<std::size_t>& action_counts,
                               std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  std::mt19937_64 gen(seq);
  std::vector<Action> x(action_counts.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<Action>(gen() % action_counts[i]);
  return StrategyProfile(std::move(x));
}

PotentialMaximum maximize_restricted_potential(const RestrictedGame& game, MaximizeMethod method,
                                               std::uint64_t seed,
                                               std::optional<std::uint64_t> max_sweeps,
                                               std::uint64_t budget) {
  const auto& g = game.game;
  const auto cert = check_potential(g, budget);
  if (!cert.verified) throw DomainError("restricted game is not an exact potential game");
  const auto& space = g.space();
  PotentialMaximum out;

  if (method == MaximizeMethod::kExhaustive) {
    ProfileIndex best = 0;
    for (ProfileIndex x = 1; x < cert.potential.size(); ++x) {
      if (cert.potential[x] > cert.potential[best]) best = x;
    }
    out.profile = space.decode(best);
    out.potential = cert.potential[best];
    out.trace = {out.potential};
    return out;
  }

  const auto start = seeded_profile(space.action_counts(), seed);
  out.trace.push_back(cert.potential[space.encode(start)]);
  const auto result = best_response_descent(
      space.action_counts(),
      [&](Player i, const StrategyProfile& x, Action a) {
        return g.utility(i, space.deviate(space.encode(x), i, a));
      },
      start, max_sweeps.value_or(g.profile_count()),
      [&](const StrategyProfile& x) { out.trace.push_back(cert.potential[space.encode(x)]); });
  out.profile = result.profile;
  out.sweeps = result.sweeps;
  out.potential = cert.potential[space.encode(out.profile)];
  return out;
}

std::string to_string(MixedNashStatus s) {
  switch (s) {
    case MixedNashStatus::kCertified: return "certified";
    case MixedNashStatus::kNotCohesive: return "not-cohesive";
    case MixedNashStatus::kCouplingFailed: return "coupling-failed";
  }
  return "not-cohesive";
}

MixedNashOutcome construct_mixed_nash(const Graph& graph, const SpinAssignment& xi, int sign,
                                      const MixedNashOptions& options) {
  if (sign != 1 && sign != -1) throw InputError("sign must be +1 or -1");
  const auto game = coord_anticoord(graph, xi);
  const auto coord = xi.coordinating();
  const auto anti = xi.anti_coordinating();
  const std::size_t n = graph.num_nodes();

  MixedNashOutcome out;
  out.sign = sign;
  const Action consensus = action_of_spin(sign);
  std::vector<Action> x(n, consensus);

  if (!coord.empty()) {
    out.cohesion = is_cohesive(graph, coord);
    if (!out.cohesion->cohesive) {
      out.status = MixedNashStatus::kNotCohesive;
      return out;
    }
    const PartitionContext ctx(game.space(), coord);
    const StrategyProfile y(std::vector<Action>(coord.size(), consensus));
    out.coupling = coupling_condition(game, ctx, y, CouplingThreshold::kExact);
    if (!out.coupling->certified) {
      out.status = MixedNashStatus::kCouplingFailed;
      return out;
    }
  }

  if (!anti.empty()) {
    const PartitionContext block(game.space(), anti);
    const StrategyProfile frozen(std::vector<Action>(coord.size(), consensus));
    const BlockPotential potential(game, block, frozen);
    StrategyProfile z;
    const auto size = block.restricted_space().checked_size();
    if (size && *size <= options.exhaustive_budget) {
      const auto restricted = freeze_pairwise(game, block, frozen, options.exhaustive_budget);
      const auto best =
          maximize_restricted_potential(restricted, MaximizeMethod::kExhaustive, options.seed, {},
                                        options.exhaustive_budget);
      // The recovered potential and the edge-wise construction must agree
      // up to a constant.
      const auto recovered = check_potential(restricted.game, options.exhaustive_budget);
      const auto built = potential.table(options.exhaustive_budget);
      const double offset = recovered.potential[0] - built[0];
      for (std::size_t k = 0; k < built.size(); ++k) {
        if (std::abs(recovered.potential[k] - built[k] - offset) > kPotentialTolerance) {
          throw InvariantViolation("block potential disagrees with the recovered potential");
        }
      }
      z = best.profile;
      out.method = "exhaustive";
    } else {
      const auto result = best_response_descent(
          std::vector<std::size_t>(anti.size(), 2),
          [&](Player k, const StrategyProfile& local, Action a) {
            auto full = x;
            for (std::size_t m = 0; m < anti.size(); ++m) full[anti[m]] = local[m];
            return game.utility_if(anti[k], StrategyProfile(std::move(full)), a);
          },
          seeded_profile(std::vector<std::size_t>(anti.size(), 2), options.seed),
          options.max_sweeps);
      z = result.profile;
      out.method = "best-response";
    }
    out.block_potential = potential(z);
    for (std::size_t m = 0; m < anti.size(); ++m) x[anti[m]] = z[m];
  }

  StrategyProfile profile(std::move(x));
  if (!game.is_nash(profile)) {
    throw InvariantViolation("assembled profile is not a Nash equilibrium of the full game");
  }
  out.profile = std::move(profile);
  out.status = MixedNashStatus::kCertified;
  return out;
}

}  // namespace robnash

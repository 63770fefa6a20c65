#include <doctest.h>

#include <random>

#include "robnash/graph.hpp"
#include "robnash/nash.hpp"
#include "robnash/network.hpp"
#include "robnash/subgames.hpp"
#include "support.hpp"

using namespace robnash;
using namespace robnash::testing;

namespace {

FiniteGame discoordination() {
  Graph g(2, false);
  g.add_edge(0, 1);
  return coord_anticoord(g, SpinAssignment({+1, -1})).to_finite_game();
}

std::vector<Player> random_subset(std::mt19937_64& gen, std::size_t n) {
  std::vector<Player> r;
  for (Player i = 0; i < n; ++i) {
    if (gen() % 2 == 0) r.push_back(i);
  }
  if (r.empty()) r.push_back(gen() % n);
  return r;
}

}  // namespace

TEST_CASE("partition context splits and joins") {
  const ProfileSpace space({2, 3, 2, 2});
  const PartitionContext ctx(space, {3, 1});
  CHECK(ctx.restricted() == std::vector<Player>{1, 3});
  CHECK(ctx.complement() == std::vector<Player>{0, 2});
  CHECK(ctx.restricted_space().action_counts() == std::vector<std::size_t>{3, 2});
  CHECK(ctx.in_restricted(3));
  CHECK_FALSE(ctx.in_restricted(0));
  for (ProfileIndex k = 0; k < space.size(); ++k) {
    const auto x = space.decode(k);
    const auto [y, z] = ctx.split(x);
    CHECK(ctx.join(y, z) == x);
  }
  CHECK_THROWS_AS(PartitionContext(space, {}), InputError);
  CHECK_THROWS_AS(PartitionContext(space, {4}), InputError);
  CHECK_THROWS_AS(PartitionContext(space, {1, 1}), InputError);
}

TEST_CASE("freezing the empty complement returns the game") {
  const auto pd = prisoners_dilemma(1, 2, 3, 0);
  const PartitionContext ctx(pd.space(), {0, 1});
  const auto frozen = freeze(pd, ctx, StrategyProfile{});
  CHECK(frozen.game == pd);
  CHECK(frozen.provenance == Provenance::kFrozen);
  CHECK(average_over_complement(pd, ctx).game == pd);
}

TEST_CASE("freezing a coordination path") {
  const auto g = coord_anticoord(graphs::path(3), SpinAssignment::constant(3, 1)).to_finite_game();
  const PartitionContext ctx(g.space(), {0, 1});
  const auto frozen = freeze(g, ctx, StrategyProfile{1});
  CHECK(frozen.players == std::vector<Player>{0, 1});
  CHECK(frozen.frozen_at == StrategyProfile{1});
  for (ProfileIndex k = 0; k < 4; ++k) {
    const auto y = oracle_decode(k, {2, 2});
    const double y1 = y[0] == 0 ? -1 : 1;
    const double y2 = y[1] == 0 ? -1 : 1;
    CHECK(frozen.game.utility(1, k) == y1 * y2 + y2);
  }
  CHECK_THROWS_AS(freeze(g, ctx, StrategyProfile{2}), InputError);
  CHECK_THROWS_AS(freeze(g, ctx, StrategyProfile{0, 0}), InputError);
}

TEST_CASE("freezing to one player leaves a decision problem") {
  const auto pd = prisoners_dilemma(1, 2, 3, 0);
  const PartitionContext ctx(pd.space(), {0});
  for (Action z = 0; z < 2; ++z) {
    const auto frozen = freeze(pd, ctx, StrategyProfile{z});
    const auto eq = enumerate_nash(frozen.game);
    REQUIRE(eq.size() == 1);
    const double best = std::max(pd.utility(0, StrategyProfile{0, z}), pd.utility(0, StrategyProfile{1, z}));
    CHECK(pd.utility(0, StrategyProfile{eq[0][0], z}) == best);
  }
}

TEST_CASE("averaging over the anti-coordinating block gives induced coordination") {
  const auto graph = graphs::path(4);
  const SpinAssignment xi({1, 1, -1, 1});
  const auto g = coord_anticoord(graph, xi).to_finite_game();
  const PartitionContext ctx(g.space(), xi.coordinating());
  const auto avg = average_over_complement(g, ctx);
  CHECK(avg.provenance == Provenance::kAveraged);
  Graph induced(3, false);
  induced.add_edge(0, 1);
  const auto expected = coord_anticoord(induced, SpinAssignment::constant(3, 1)).to_finite_game();
  CHECK(game_distance(avg.game, expected) == 0.0);
}

TEST_CASE("averaging is constant when R ignores the complement") {
  const FiniteGame separable({2, 3}, {{1, 1, 1, 4, 4, 4}, {0, 1, 2, 3, 4, 5}});
  const PartitionContext ctx(separable.space(), {0});
  const auto avg = average_over_complement(separable, ctx);
  for (Action z = 0; z < 3; ++z) CHECK(freeze(separable, ctx, StrategyProfile{z}).game == avg.game);
  CHECK_THROWS_AS(average_over_complement(separable, ctx, 2), CapacityError);
}

TEST_CASE("restricted distance: averaged coordination equals outside degree") {
  std::mt19937_64 gen(31);
  for (int t = 0; t < 30; ++t) {
    const auto graph = random_graph(gen, 2 + gen() % 6, 0.5, false);
    const auto g = coord_anticoord(graph, SpinAssignment::constant(graph.num_nodes(), 1)).to_finite_game();
    const auto r = random_subset(gen, graph.num_nodes());
    const PartitionContext ctx(g.space(), r);
    const auto avg = average_over_complement(g, ctx);
    const auto in_r = membership(graph.num_nodes(), r);
    double expected = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      const double outside = static_cast<double>(graph.degree(r[k]) - graph.split_degree(r[k], in_r));
      CHECK(restricted_player_distance(g, avg, k) == outside);
      expected = std::max(expected, outside);
    }
    CHECK(game_distance(g, avg) == expected);
  }
}

TEST_CASE("uniform certificate examples") {
  const auto pd = prisoners_dilemma(1, 2, 3, 0);
  const PartitionContext all(pd.space(), {0, 1});
  CHECK(uniform_nash_certificate(pd, all, {0, 0}, CertificateMode::kSufficient).certified);
  CHECK_FALSE(uniform_nash_certificate(pd, all, {1, 1}, CertificateMode::kSufficient).certified);
  CHECK(uniform_nash_certificate(pd, all, {0, 0}, CertificateMode::kBruteForce).certified);

  const auto dis = discoordination();
  const PartitionContext coord(dis.space(), {0});
  const auto brute = uniform_nash_certificate(dis, coord, StrategyProfile{1}, CertificateMode::kBruteForce);
  CHECK_FALSE(brute.certified);
  CHECK(brute.counterexample == StrategyProfile{0});
  CHECK_FALSE(uniform_nash_certificate(dis, coord, StrategyProfile{1}, CertificateMode::kSufficient).certified);

  const auto graph = graphs::path(4);
  const SpinAssignment xi({1, 1, 1, -1});
  const auto g = coord_anticoord(graph, xi).to_finite_game();
  const PartitionContext vc(g.space(), xi.coordinating());
  const StrategyProfile up{1, 1, 1};
  const auto sufficient = uniform_nash_certificate(g, vc, up, CertificateMode::kSufficient);
  CHECK(sufficient.certified);
  CHECK(sufficient.nash_of_average);
  CHECK(sufficient.players == std::vector<Player>{0, 1, 2});
  // Node 2: chi_avg = 2 * |N \cap R| = 2, distance 1.
  CHECK(sufficient.slack == std::vector<double>{2.0, 4.0, 0.0});
  CHECK(uniform_nash_certificate(g, vc, up, CertificateMode::kBruteForce).certified);
}

TEST_CASE("property: averaging is the mean of the frozen games") {
  std::mt19937_64 gen(32);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_game(gen, 4, 3);
    const PartitionContext ctx(g.space(), random_subset(gen, g.num_players()));
    const auto avg = average_over_complement(g, ctx);
    const auto& zs = ctx.complement_space();
    std::vector<std::vector<double>> sum(ctx.restricted().size(),
                                         std::vector<double>(ctx.restricted_space().size(), 0.0));
    double worst = 0.0;
    for (ProfileIndex z = 0; z < zs.size(); ++z) {
      const auto frozen = freeze(g, ctx, zs.decode(z));
      for (std::size_t k = 0; k < sum.size(); ++k) {
        for (ProfileIndex y = 0; y < sum[k].size(); ++y) sum[k][y] += frozen.game.utility(k, y);
      }
    }
    for (std::size_t k = 0; k < sum.size(); ++k) {
      for (ProfileIndex y = 0; y < sum[k].size(); ++y) {
        CHECK(std::abs(avg.game.utility(k, y) - sum[k][y] / zs.size()) <= 1e-12);
      }
      // ||u_k - avg_k|| is the largest frozen deviation from the average.
      for (ProfileIndex z = 0; z < zs.size(); ++z) {
        const auto frozen = freeze(g, ctx, zs.decode(z));
        for (ProfileIndex y = 0; y < sum[k].size(); ++y) {
          worst = std::max(worst, std::abs(frozen.game.utility(k, y) - avg.game.utility(k, y)));
        }
      }
    }
    double dist = 0.0;
    for (std::size_t k = 0; k < sum.size(); ++k) dist = std::max(dist, restricted_player_distance(g, avg, k));
    CHECK(dist == worst);
  }
}

TEST_CASE("property: the sufficient certificate is sound") {
  std::mt19937_64 gen(33);
  int certified = 0;
  for (int t = 0; t < 400; ++t) {
    const auto shape = random_game(gen, 4, 3);
    const PartitionContext ctx(shape.space(), random_subset(gen, shape.num_players()));
    const auto g = t % 3 == 0 ? shape : weakly_coupled(gen, shape, ctx, 0.02 * (gen() % 5));
    const auto& rs = ctx.restricted_space();
    for (ProfileIndex y = 0; y < rs.size(); ++y) {
      const auto profile = rs.decode(y);
      const auto suff = uniform_nash_certificate(g, ctx, profile, CertificateMode::kSufficient);
      const auto brute = uniform_nash_certificate(g, ctx, profile, CertificateMode::kBruteForce);
      // Independent ground truth.
      bool truth = true;
      for (ProfileIndex z = 0; z < ctx.complement_space().size(); ++z) {
        const auto x = ctx.join(profile, ctx.complement_space().decode(z));
        for (std::size_t k = 0; k < ctx.restricted().size(); ++k) {
          const Player i = ctx.restricted()[k];
          if (oracle_chi(g, x.actions(), i) < 0) truth = false;
        }
      }
      CHECK(brute.certified == truth);
      if (suff.certified) {
        ++certified;
        CHECK(truth);
      }
    }
  }
  CHECK(certified > 50);
}

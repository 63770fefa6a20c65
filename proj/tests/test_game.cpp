#include <doctest.h>

#include <random>

#include "robnash/game.hpp"
#include "support.hpp"

using namespace robnash;
using namespace robnash::testing;

TEST_CASE("profile encoding is lexicographic with player 0 most significant") {
  ProfileSpace space({2, 3, 2});
  CHECK(space.size() == 12);
  CHECK(space.encode({0, 0, 0}) == 0);
  CHECK(space.encode({0, 0, 1}) == 1);
  CHECK(space.encode({0, 1, 0}) == 2);
  CHECK(space.encode({1, 2, 1}) == 11);
  for (ProfileIndex k = 0; k < 12; ++k) {
    const auto x = space.decode(k);
    CHECK(x.actions() == oracle_decode(k, {2, 3, 2}));
    CHECK(space.encode(x) == k);
    for (Player i = 0; i < 3; ++i) {
      CHECK(space.action_at(k, i) == x[i]);
      for (Action a = 0; a < space.action_count(i); ++a) {
        CHECK(space.deviate(k, i, a) == space.encode(x.with(i, a)));
      }
    }
  }
}

TEST_CASE("profile comparability and projection") {
  const StrategyProfile x{1, 0, 2};
  CHECK(x.comparable(x.with(1, 1), 1));
  CHECK_FALSE(x.comparable(x.with(1, 1), 0));
  CHECK(x.comparable(x, 2));
  const std::vector<Player> keep{2, 0};
  CHECK(x.project(keep) == StrategyProfile{2, 1});
}

TEST_CASE("profile space rejects bad input and oversized products") {
  CHECK_THROWS_AS(ProfileSpace({2, 0}), InputError);
  ProfileSpace space({2, 2});
  CHECK_FALSE(space.contains({0, 2}));
  CHECK_FALSE(space.contains({0}));
  CHECK_THROWS_AS(space.validate({0, 2}), InputError);
  CHECK_THROWS_AS(space.size(3), CapacityError);

  ProfileSpace huge(std::vector<std::size_t>(70, 2));
  CHECK_FALSE(huge.checked_size().has_value());
  CHECK_THROWS_AS(huge.size(), CapacityError);
  CHECK_THROWS_AS(FiniteGame::from_function(std::vector<std::size_t>(30, 2),
                                            [](Player, const StrategyProfile&) { return 0.0; }),
                  CapacityError);
}

TEST_CASE("finite game validates tables") {
  CHECK_THROWS_AS(FiniteGame({2}, {{1.0}}), InputError);
  CHECK_THROWS_AS(FiniteGame({2}, {{1.0, 2.0}, {0.0, 0.0}}), InputError);
  CHECK_THROWS_AS(FiniteGame({2}, {{1.0, std::numeric_limits<double>::quiet_NaN()}}), InputError);
  CHECK_THROWS_AS(FiniteGame({2}, {{1.0, std::numeric_limits<double>::infinity()}}), InputError);
  const FiniteGame g({2, 2}, {{1, 2, 3, 4}, {5, 6, 7, 8}});
  CHECK(g.utility(1, StrategyProfile{1, 0}) == 7);
  CHECK_THROWS_AS(g.utility(0, StrategyProfile{2, 0}), InputError);
  CHECK_THROWS_AS(g.validate_player(2), InputError);
}

TEST_CASE("from_function tabulates in encoding order") {
  const auto g = FiniteGame::from_function(
      {2, 3}, [](Player i, const StrategyProfile& x) { return 10.0 * i + 3.0 * x[0] + x[1]; });
  for (ProfileIndex k = 0; k < 6; ++k) {
    const auto x = oracle_decode(k, {2, 3});
    CHECK(g.utility(0, k) == 3.0 * x[0] + x[1]);
    CHECK(g.utility(1, k) == 10.0 + 3.0 * x[0] + x[1]);
  }
}

TEST_CASE("perturbation norms and application") {
  const FiniteGame g({2}, {{1.0, -1.0}});
  auto delta = Perturbation::zeros_like(g);
  CHECK(delta.norm() == 0.0);
  delta.at(0, 1) = -0.75;
  delta.at(0, 0) = 0.25;
  CHECK(delta.player_norm(0) == 0.75);
  CHECK(delta.norm() == 0.75);
  const auto shifted = delta.apply_to(g);
  CHECK(shifted.utility(0, ProfileIndex{0}) == 1.25);
  CHECK(shifted.utility(0, ProfileIndex{1}) == -1.75);
  const FiniteGame other({3}, {{0, 0, 0}});
  CHECK_THROWS_AS(delta.apply_to(other), InputError);
}

TEST_CASE("random game generator stays in shape") {
  std::mt19937_64 gen(7);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_game(gen);
    std::uint64_t n = 1;
    for (auto c : g.space().action_counts()) n *= c;
    CHECK(g.profile_count() == n);
    for (Player i = 0; i < g.num_players(); ++i) CHECK(g.table(i).size() == n);
  }
}

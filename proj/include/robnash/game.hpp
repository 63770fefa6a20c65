#pragma once

// Dense finite games in normal form: profile spaces with mixed-radix
// encoding, strategy profiles, utility tables and utility perturbations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "robnash/errors.hpp"

namespace robnash {

using Player = std::size_t;
using Action = std::size_t;
using ProfileIndex = std::uint64_t;

/// Upper bound on the number of joint profiles any dense operation will touch.
inline constexpr std::uint64_t kDefaultProfileBudget = std::uint64_t{1} << 24;

/// One action index per player.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<Action> actions) : actions_(std::move(actions)) {}
  StrategyProfile(std::initializer_list<Action> actions) : actions_(actions) {}

  std::size_t size() const { return actions_.size(); }
  bool empty() const { return actions_.empty(); }
  Action operator[](Player i) const { return actions_[i]; }
  const std::vector<Action>& actions() const { return actions_; }

  /// Copy of this profile with player i switched to action a.
  StrategyProfile with(Player i, Action a) const;

  /// x ~_i y: the profiles agree everywhere except possibly at coordinate i.
  bool comparable(const StrategyProfile& other, Player i) const;

  /// Sub-profile on the listed players, in the listed order.
  StrategyProfile project(std::span<const Player> players) const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<Action> actions_;
};

/// The joint action space X = A_1 x ... x A_n. Profiles are encoded
/// row-major with player 0 most significant, so index order is
/// lexicographic order of action vectors.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<std::size_t> action_counts);

  std::size_t num_players() const { return counts_.size(); }
  std::size_t action_count(Player i) const { return counts_[i]; }
  const std::vector<std::size_t>& action_counts() const { return counts_; }

  /// |X|, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> checked_size() const;
  /// |X|; throws CapacityError if it exceeds `budget`.
  std::uint64_t size(std::uint64_t budget = kDefaultProfileBudget) const;

  bool contains(const StrategyProfile& x) const;
  /// Throws InputError naming the first offending coordinate.
  void validate(const StrategyProfile& x) const;

  ProfileIndex encode(const StrategyProfile& x) const;
  StrategyProfile decode(ProfileIndex index) const;
  /// Index of the profile obtained by switching player i to action a.
  ProfileIndex deviate(ProfileIndex index, Player i, Action a) const;
  Action action_at(ProfileIndex index, Player i) const;
  ProfileIndex stride(Player i) const { return strides_[i]; }

  friend bool operator==(const ProfileSpace& a, const ProfileSpace& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<std::size_t> counts_;
  std::vector<ProfileIndex> strides_;
  bool overflow_ = false;
};

/// Finite game with dense utility tables u_i over X.
class FiniteGame {
 public:
  FiniteGame() = default;
  /// `utilities[i]` must hold |X| finite entries indexed by profile encoding.
  /// A game without players has the single empty profile.
  FiniteGame(std::vector<std::size_t> action_counts,
             std::vector<std::vector<double>> utilities,
             std::uint64_t budget = kDefaultProfileBudget);

  using UtilityFn = std::function<double(Player, const StrategyProfile&)>;
  static FiniteGame from_function(std::vector<std::size_t> action_counts, const UtilityFn& utility,
                                  std::uint64_t budget = kDefaultProfileBudget);

  const ProfileSpace& space() const { return space_; }
  std::size_t num_players() const { return space_.num_players(); }
  std::size_t action_count(Player i) const { return space_.action_count(i); }
  std::uint64_t profile_count() const { return profile_count_; }

  double utility(Player i, ProfileIndex x) const { return utilities_[i][x]; }
  double utility(Player i, const StrategyProfile& x) const;
  std::span<const double> table(Player i) const { return utilities_[i]; }
  const std::vector<std::vector<double>>& tables() const { return utilities_; }

  /// Throws InputError unless i names a player.
  void validate_player(Player i) const;

  /// Same players and action counts.
  bool same_shape(const FiniteGame& other) const { return space_ == other.space_; }

  friend bool operator==(const FiniteGame&, const FiniteGame&) = default;

 private:
  ProfileSpace space_;
  std::uint64_t profile_count_ = 0;
  std::vector<std::vector<double>> utilities_;
};

/// Utility-table delta with the shape of a game.
class Perturbation {
 public:
  /// All-zero perturbation shaped like `game`.
  static Perturbation zeros_like(const FiniteGame& game);
  Perturbation(ProfileSpace space, std::vector<std::vector<double>> deltas);

  const ProfileSpace& space() const { return space_; }
  double& at(Player i, ProfileIndex x) { return deltas_[i][x]; }
  double at(Player i, ProfileIndex x) const { return deltas_[i][x]; }
  std::span<const double> table(Player i) const { return deltas_[i]; }
  std::size_t num_players() const { return deltas_.size(); }

  /// max_x |delta_i(x)|
  double player_norm(Player i) const;
  /// max_i max_x |delta_i(x)|
  double norm() const;

  /// u + delta. Throws InputError on a shape mismatch.
  FiniteGame apply_to(const FiniteGame& game) const;

 private:
  ProfileSpace space_;
  std::vector<std::vector<double>> deltas_;
};

}  // namespace robnash

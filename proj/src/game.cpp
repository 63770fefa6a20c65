#include "robnash/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace robnash {

StrategyProfile StrategyProfile::with(Player i, Action a) const {
  StrategyProfile out = *this;
  out.actions_.at(i) = a;
  return out;
}

bool StrategyProfile::comparable(const StrategyProfile& other, Player i) const {
  if (other.size() != size()) return false;
  for (std::size_t k = 0; k < size(); ++k) {
    if (k != i && actions_[k] != other.actions_[k]) return false;
  }
  return true;
}

StrategyProfile StrategyProfile::project(std::span<const Player> players) const {
  std::vector<Action> out;
  out.reserve(players.size());
  for (Player p : players) out.push_back(actions_.at(p));
  return StrategyProfile(std::move(out));
}

ProfileSpace::ProfileSpace(std::vector<std::size_t> action_counts)
    : counts_(std::move(action_counts)), strides_(counts_.size(), 1) {
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) {
      throw InputError("player " + std::to_string(i) + " has an empty action set");
    }
  }
  ProfileIndex stride = 1;
  for (std::size_t k = counts_.size(); k-- > 0;) {
    strides_[k] = stride;
    if (stride > std::numeric_limits<ProfileIndex>::max() / counts_[k]) {
      overflow_ = true;
      stride = std::numeric_limits<ProfileIndex>::max();
    } else {
      stride *= counts_[k];
    }
  }
}

std::optional<std::uint64_t> ProfileSpace::checked_size() const {
  if (overflow_) return std::nullopt;
  std::uint64_t n = 1;
  for (auto c : counts_) n *= c;
  return n;
}

std::uint64_t ProfileSpace::size(std::uint64_t budget) const {
  auto n = checked_size();
  if (!n || *n > budget) {
    throw CapacityError("profile space has " +
                        (n ? std::to_string(*n) : std::string("more than 2^64")) +
                        " profiles, exceeding the enumeration budget of " +
                        std::to_string(budget));
  }
  return *n;
}

bool ProfileSpace::contains(const StrategyProfile& x) const {
  if (x.size() != counts_.size()) return false;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (x[i] >= counts_[i]) return false;
  }
  return true;
}

void ProfileSpace::validate(const StrategyProfile& x) const {
  if (x.size() != counts_.size()) {
    throw InputError("profile has " + std::to_string(x.size()) + " entries, expected " +
                     std::to_string(counts_.size()));
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (x[i] >= counts_[i]) {
      throw InputError("action " + std::to_string(x[i]) + " of player " + std::to_string(i) +
                       " is out of range (player has " + std::to_string(counts_[i]) +
                       " actions)");
    }
  }
}

ProfileIndex ProfileSpace::encode(const StrategyProfile& x) const {
  validate(x);
  if (overflow_) throw CapacityError("profile space too large to encode");
  ProfileIndex index = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) index += x[i] * strides_[i];
  return index;
}

StrategyProfile ProfileSpace::decode(ProfileIndex index) const {
  std::vector<Action> actions(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) actions[i] = action_at(index, i);
  return StrategyProfile(std::move(actions));
}

Action ProfileSpace::action_at(ProfileIndex index, Player i) const {
  return static_cast<Action>((index / strides_[i]) % counts_[i]);
}

ProfileIndex ProfileSpace::deviate(ProfileIndex index, Player i, Action a) const {
  const Action current = action_at(index, i);
  return index - current * strides_[i] + a * strides_[i];
}

FiniteGame::FiniteGame(std::vector<std::size_t> action_counts,
                       std::vector<std::vector<double>> utilities, std::uint64_t budget)
    : space_(std::move(action_counts)), utilities_(std::move(utilities)) {
  profile_count_ = space_.size(budget);
  if (utilities_.size() != space_.num_players()) {
    throw InputError("expected " + std::to_string(space_.num_players()) +
                     " utility tables, got " + std::to_string(utilities_.size()));
  }
  for (std::size_t i = 0; i < utilities_.size(); ++i) {
    if (utilities_[i].size() != profile_count_) {
      throw InputError("utility table of player " + std::to_string(i) + " has " +
                       std::to_string(utilities_[i].size()) + " entries, expected " +
                       std::to_string(profile_count_));
    }
    for (double v : utilities_[i]) {
      if (!std::isfinite(v)) {
        throw InputError("utility table of player " + std::to_string(i) +
                         " contains a non-finite entry");
      }
    }
  }
}

FiniteGame FiniteGame::from_function(std::vector<std::size_t> action_counts,
                                     const UtilityFn& utility, std::uint64_t budget) {
  ProfileSpace space(action_counts);
  const auto n = space.size(budget);
  std::vector<std::vector<double>> tables(space.num_players(), std::vector<double>(n));
  for (ProfileIndex x = 0; x < n; ++x) {
    const auto profile = space.decode(x);
    for (Player i = 0; i < space.num_players(); ++i) tables[i][x] = utility(i, profile);
  }
  return FiniteGame(std::move(action_counts), std::move(tables), budget);
}

double FiniteGame::utility(Player i, const StrategyProfile& x) const {
  validate_player(i);
  return utilities_[i][space_.encode(x)];
}

void FiniteGame::validate_player(Player i) const {
  if (i >= num_players()) {
    throw InputError("player " + std::to_string(i) + " does not exist (game has " +
                     std::to_string(num_players()) + " players)");
  }
}

Perturbation Perturbation::zeros_like(const FiniteGame& game) {
  return Perturbation(game.space(),
                      std::vector<std::vector<double>>(
                          game.num_players(), std::vector<double>(game.profile_count(), 0.0)));
}

Perturbation::Perturbation(ProfileSpace space, std::vector<std::vector<double>> deltas)
    : space_(std::move(space)), deltas_(std::move(deltas)) {
  const auto n = space_.checked_size();
  if (deltas_.size() != space_.num_players()) {
    throw InputError("perturbation has the wrong number of player tables");
  }
  for (const auto& t : deltas_) {
    if (!n || t.size() != *n) throw InputError("perturbation table has the wrong size");
    for (double v : t) {
      if (!std::isfinite(v)) throw InputError("perturbation contains a non-finite entry");
    }
  }
}

double Perturbation::player_norm(Player i) const {
  double m = 0.0;
  for (double v : deltas_.at(i)) m = std::max(m, std::abs(v));
  return m;
}

double Perturbation::norm() const {
  double m = 0.0;
  for (Player i = 0; i < deltas_.size(); ++i) m = std::max(m, player_norm(i));
  return m;
}

FiniteGame Perturbation::apply_to(const FiniteGame& game) const {
  if (!(game.space() == space_)) throw InputError("perturbation shape does not match the game");
  auto tables = game.tables();
  for (Player i = 0; i < tables.size(); ++i) {
    for (std::size_t x = 0; x < tables[i].size(); ++x) tables[i][x] += deltas_[i][x];
  }
  return FiniteGame(game.space().action_counts(), std::move(tables),
                    std::numeric_limits<std::uint64_t>::max());
}

}  // namespace robnash

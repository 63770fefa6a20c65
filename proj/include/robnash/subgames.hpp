#pragma once

// Player partitions V = R u S, the frozen restricted games u^(z), the
// averaged game over the complement, and uniform-equilibrium certificates.

#include <optional>
#include <string>
#include <vector>

#include "robnash/game.hpp"

namespace robnash {

/// A split of the player set into a non-empty block R and its complement S.
/// Player lists are kept sorted; sub-profiles follow that order.
class PartitionContext {
 public:
  PartitionContext(const ProfileSpace& full, std::vector<Player> restricted);

  const std::vector<Player>& restricted() const { return restricted_; }
  const std::vector<Player>& complement() const { return complement_; }
  const ProfileSpace& full_space() const { return full_; }
  const ProfileSpace& restricted_space() const { return restricted_space_; }
  const ProfileSpace& complement_space() const { return complement_space_; }

  /// True iff player i is in R.
  bool in_restricted(Player i) const { return member_[i]; }

  /// x -> (x_R, x_S).
  std::pair<StrategyProfile, StrategyProfile> split(const StrategyProfile& x) const;
  /// (y, z) -> x with x_R = y and x_S = z.
  StrategyProfile join(const StrategyProfile& y, const StrategyProfile& z) const;

 private:
  ProfileSpace full_;
  std::vector<Player> restricted_;
  std::vector<Player> complement_;
  std::vector<bool> member_;
  ProfileSpace restricted_space_;
  ProfileSpace complement_space_;
};

enum class Provenance { kFrozen, kAveraged, kExternal };

std::string to_string(Provenance p);

/// A game on X_R. `players[k]` is the original index of local player k.
struct RestrictedGame {
  FiniteGame game;
  std::vector<Player> players;
  Provenance provenance = Provenance::kExternal;
  /// The complement profile z for a frozen game.
  std::optional<StrategyProfile> frozen_at;
};

/// u^(z)_i(y) = u_i(y, z) for i in R.
RestrictedGame freeze(const FiniteGame& game, const PartitionContext& ctx,
                      const StrategyProfile& z);

/// Uniform average of u^(z) over every z in X_S.
RestrictedGame average_over_complement(const FiniteGame& game, const PartitionContext& ctx,
                                       std::uint64_t budget = kDefaultProfileBudget);

/// max over x in X of |u_i(x) - v_k(x_R)| where v_k is the local copy of player i.
double restricted_player_distance(const FiniteGame& u, const RestrictedGame& v,
                                  std::size_t local_player);

/// ||u - v||_inf between a game on X and a restricted game on X_R.
double game_distance(const FiniteGame& u, const RestrictedGame& v);

enum class CertificateMode {
  /// Check y against the averaged game with the 2 ||u_i - avg_i|| slack rule.
  kSufficient,
  /// Check y in u^(z) for every z directly.
  kBruteForce,
};

std::string to_string(CertificateMode m);

struct CertificateResult {
  bool certified = false;
  CertificateMode mode = CertificateMode::kSufficient;
  /// Original indices of the players in R.
  std::vector<Player> players;
  /// Sufficient mode: chi^avg_i(y) - 2 ||u_i - avg_i||.
  /// Brute-force mode: min over z of chi_i(y) in u^(z).
  std::vector<double> slack;
  /// Sufficient mode: whether y is an equilibrium of the averaged game.
  bool nash_of_average = false;
  /// Brute-force mode: lowest-encoded z for which y fails.
  std::optional<StrategyProfile> counterexample;
  /// Free-form label for screens that use another threshold.
  std::string threshold;
};

/// Checks that y is an equilibrium of u^(z) for every z over the complement.
CertificateResult uniform_nash_certificate(const FiniteGame& game, const PartitionContext& ctx,
                                           const StrategyProfile& y, CertificateMode mode,
                                           std::uint64_t budget = kDefaultProfileBudget);

}  // namespace robnash

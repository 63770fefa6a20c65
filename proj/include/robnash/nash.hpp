#pragma once

// Deviation margins, pure Nash testing and enumeration, game distances and
// exact-potential recovery.

#include <limits>
#include <optional>
#include <vector>

#include "robnash/game.hpp"

namespace robnash {

/// Sentinel deviation margin of a player with a single action.
inline constexpr double kNoDeviation = std::numeric_limits<double>::infinity();

/// Absolute tolerance for the potential identity u_i(x)-u_i(y) = phi(x)-phi(y).
inline constexpr double kPotentialTolerance = 1e-9;

/// chi_i(x) = min over unilateral deviations y of u_i(x) - u_i(y).
/// Negative when player i has a profitable deviation; +inf if |A_i| = 1.
double deviation_margin(const FiniteGame& game, const StrategyProfile& x, Player i);
double deviation_margin(const FiniteGame& game, ProfileIndex x, Player i);

/// The deviation action attaining chi_i(x), lowest action index on ties.
/// Empty for a singleton action set.
std::optional<Action> minimizing_deviation(const FiniteGame& game, const StrategyProfile& x,
                                           Player i);

/// chi_i(x) for every player.
std::vector<double> deviation_margins(const FiniteGame& game, const StrategyProfile& x);

/// x is Nash iff chi_i(x) >= -tolerance for every i. tolerance = 0 is exact.
bool is_nash(const FiniteGame& game, const StrategyProfile& x, double tolerance = 0.0);
bool is_nash(const FiniteGame& game, ProfileIndex x, double tolerance = 0.0);

/// Every pure Nash equilibrium, in lexicographic order.
std::vector<StrategyProfile> enumerate_nash(const FiniteGame& game,
                                            std::uint64_t budget = kDefaultProfileBudget,
                                            double tolerance = 0.0);

/// ||u - v||_inf for games of identical shape.
double game_distance(const FiniteGame& u, const FiniteGame& v);

struct PotentialCertificate {
  /// phi over X, zero at the all-zeros profile. Meaningful only when verified.
  std::vector<double> potential;
  bool verified = false;
};

/// Recovers an exact potential by integrating utility differences along
/// single-coordinate paths from the all-zeros profile, then re-checks the
/// potential identity on every i-comparable pair.
PotentialCertificate check_potential(const FiniteGame& game,
                                     std::uint64_t budget = kDefaultProfileBudget);

}  // namespace robnash

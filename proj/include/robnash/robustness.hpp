#pragma once

// Margin of robustness of pure Nash equilibria: the largest utility
// perturbation (in the sup norm) an equilibrium is guaranteed to survive,
// with constructive witnesses, Monte-Carlo validation and the projection
// check for restricted games.

#include <cstdint>
#include <vector>

#include "robnash/game.hpp"
#include "robnash/subgames.hpp"

namespace robnash {

struct RobustnessReport {
  StrategyProfile profile;
  std::vector<double> per_player_chi;
  /// Half the smallest deviation margin. Perturbations strictly smaller
  /// than this never break the equilibrium; the bound itself is an infimum.
  double margin = 0.0;
  /// Players attaining the smallest deviation margin, ascending.
  std::vector<Player> binding_players;
};

/// Throws DomainError unless x is a Nash equilibrium.
RobustnessReport margin_of_robustness(const FiniteGame& game, const StrategyProfile& x);

struct PersistenceResult {
  /// ||delta_i|| <= chi_i(x) / 2 for every player.
  bool per_player_bound_holds = false;
  /// x is still an equilibrium of u + delta.
  bool still_nash = false;
};

/// Evaluates the per-player tolerance condition and the ground truth for a
/// given perturbation. per_player_bound_holds implies still_nash.
PersistenceResult persists_under(const FiniteGame& game, const StrategyProfile& x,
                                 const Perturbation& delta);

/// The smallest-norm perturbation that breaks x, up to epsilon: moves the
/// binding player's utility at x down and at its best deviation up by
/// half the gap plus epsilon. The result has norm margin + epsilon.
Perturbation construct_breaking_perturbation(const FiniteGame& game, const StrategyProfile& x,
                                             double epsilon);

struct FuzzRegime {
  std::string name;
  /// Target sup norm of every sampled perturbation.
  double magnitude = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t breaks = 0;
};

struct FuzzReport {
  StrategyProfile profile;
  double margin = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  /// inside (0.99 margin), witness (margin + epsilon), double (2 margin).
  std::vector<FuzzRegime> regimes;
};

/// Deterministic counter-keyed sampling of three perturbation regimes.
/// Throws InvariantViolation if a perturbation inside the margin breaks x.
FuzzReport fuzz_margin(const FiniteGame& game, const StrategyProfile& x, std::uint64_t samples,
                       std::uint64_t seed, double epsilon = 1e-2);

/// Tolerance used when confirming a projected equilibrium, absorbing the
/// rounding of table arithmetic at the boundary ||u - v|| == margin.
inline constexpr double kProjectionTolerance = 1e-9;

/// Returns whether ||u - restricted|| <= margin(x). When it does, x_R must be
/// an equilibrium of the restricted game; otherwise InvariantViolation.
bool projection_check(const FiniteGame& game, const StrategyProfile& x,
                      const RestrictedGame& restricted);

}  // namespace robnash

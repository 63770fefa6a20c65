#include "robnash/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "robnash/nash.hpp"

namespace robnash {

namespace {

// Independent stream per (seed, regime, sample), so a sample's draw never
// depends on how many samples precede it.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint32_t regime, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    regime, static_cast<std::uint32_t>(sample),
                    static_cast<std::uint32_t>(sample >> 32)};
  return std::mt19937_64(seq);
}

// Uniform on [-1, 1) from the top 53 bits; platform independent unlike
// std::uniform_real_distribution.
double symmetric_unit(std::mt19937_64& gen) {
  return 2.0 * std::ldexp(static_cast<double>(gen() >> 11), -53) - 1.0;
}

Perturbation uniform_scaled(const FiniteGame& game, std::mt19937_64& gen, double magnitude) {
  auto delta = Perturbation::zeros_like(game);
  double peak = 0.0;
  for (Player i = 0; i < game.num_players(); ++i) {
    for (ProfileIndex x = 0; x < game.profile_count(); ++x) {
      delta.at(i, x) = symmetric_unit(gen);
      peak = std::max(peak, std::abs(delta.at(i, x)));
    }
  }
  const double scale = peak > 0.0 ? magnitude / peak : 0.0;
  for (Player i = 0; i < game.num_players(); ++i) {
    for (ProfileIndex x = 0; x < game.profile_count(); ++x) delta.at(i, x) *= scale;
  }
  return delta;
}

bool breaks(const FiniteGame& game, ProfileIndex x, const Perturbation& delta) {
  return !is_nash(delta.apply_to(game), x);
}

}  // namespace

RobustnessReport margin_of_robustness(const FiniteGame& game, const StrategyProfile& x) {
  RobustnessReport report;
  report.profile = x;
  report.per_player_chi = deviation_margins(game, x);
  const double min_chi =
      *std::min_element(report.per_player_chi.begin(), report.per_player_chi.end());
  if (min_chi < 0.0) {
    throw DomainError("profile is not a Nash equilibrium; the margin of robustness is defined "
                      "only at equilibria");
  }
  report.margin = 0.5 * min_chi;
  for (Player i = 0; i < report.per_player_chi.size(); ++i) {
    if (report.per_player_chi[i] == min_chi) report.binding_players.push_back(i);
  }
  return report;
}

PersistenceResult persists_under(const FiniteGame& game, const StrategyProfile& x,
                                 const Perturbation& delta) {
  if (!(delta.space() == game.space())) {
    throw InputError("perturbation shape does not match the game");
  }
  const auto chi = deviation_margins(game, x);
  PersistenceResult out;
  out.per_player_bound_holds = true;
  for (Player i = 0; i < game.num_players(); ++i) {
    if (!(delta.player_norm(i) <= 0.5 * chi[i])) out.per_player_bound_holds = false;
  }
  out.still_nash = is_nash(delta.apply_to(game), x);
  return out;
}

Perturbation construct_breaking_perturbation(const FiniteGame& game, const StrategyProfile& x,
                                             double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("epsilon must be a positive finite number");
  }
  const auto report = margin_of_robustness(game, x);
  if (!std::isfinite(report.margin)) {
    throw DomainError("no player has a unilateral deviation; the equilibrium cannot be broken");
  }
  const Player i = report.binding_players.front();
  const Action a = *minimizing_deviation(game, x, i);
  const auto& space = game.space();
  const ProfileIndex here = space.encode(x);
  const ProfileIndex there = space.deviate(here, i, a);

  auto delta = Perturbation::zeros_like(game);
  const double shift = 0.5 * (game.utility(i, here) - game.utility(i, there)) + epsilon;
  delta.at(i, there) = shift;
  delta.at(i, here) = -shift;
  return delta;
}

FuzzReport fuzz_margin(const FiniteGame& game, const StrategyProfile& x, std::uint64_t samples,
                       std::uint64_t seed, double epsilon) {
  if (samples == 0) throw InputError("fuzzing needs at least one sample");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InputError("epsilon must be a positive finite number");
  }
  const auto report = margin_of_robustness(game, x);
  const ProfileIndex xi = game.space().encode(x);
  const bool finite = std::isfinite(report.margin);

  FuzzReport out;
  out.profile = x;
  out.margin = report.margin;
  out.epsilon = epsilon;
  out.seed = seed;

  FuzzRegime inside{"inside", finite ? 0.99 * report.margin : 1.0, samples, 0};
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto gen = sample_stream(seed, 0, s);
    if (breaks(game, xi, uniform_scaled(game, gen, inside.magnitude))) ++inside.breaks;
  }
  if (inside.breaks != 0) {
    throw InvariantViolation("a perturbation strictly inside the margin broke the equilibrium (" +
                             std::to_string(inside.breaks) + " of " + std::to_string(samples) +
                             " samples)");
  }

  FuzzRegime witness{"witness", finite ? report.margin + epsilon : 0.0, finite ? samples : 0, 0};
  if (finite) {
    const auto base = construct_breaking_perturbation(game, x, epsilon);
    const Player i = report.binding_players.front();
    const ProfileIndex there =
        game.space().deviate(xi, i, *minimizing_deviation(game, x, i));
    for (std::uint64_t s = 0; s < samples; ++s) {
      auto gen = sample_stream(seed, 1, s);
      auto delta = base;
      // Random fill everywhere except the two witness entries; the fill
      // stays within the witness magnitude so the norm is unchanged.
      for (Player j = 0; j < game.num_players(); ++j) {
        for (ProfileIndex y = 0; y < game.profile_count(); ++y) {
          const double noise = witness.magnitude * symmetric_unit(gen);
          if (j == i && (y == xi || y == there)) continue;
          delta.at(j, y) = noise;
        }
      }
      if (breaks(game, xi, delta)) ++witness.breaks;
    }
  }

  FuzzRegime doubled{"double", finite ? 2.0 * report.margin : 1.0, samples, 0};
  for (std::uint64_t s = 0; s < samples; ++s) {
    auto gen = sample_stream(seed, 2, s);
    if (breaks(game, xi, uniform_scaled(game, gen, doubled.magnitude))) ++doubled.breaks;
  }

  out.regimes = {inside, witness, doubled};
  return out;
}

bool projection_check(const FiniteGame& game, const StrategyProfile& x,
                      const RestrictedGame& restricted) {
  const auto report = margin_of_robustness(game, x);
  const double distance = game_distance(game, restricted);
  if (!(distance <= report.margin)) return false;
  const auto projected = x.project(restricted.players);
  if (!is_nash(restricted.game, projected, kProjectionTolerance)) {
    throw InvariantViolation("restricted game lies within the margin of robustness but the "
                             "projected profile is not an equilibrium of it");
  }
  return true;
}

}  // namespace robnash

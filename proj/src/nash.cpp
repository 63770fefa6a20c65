#include "robnash/nash.hpp"

#include <algorithm>
#include <cmath>

namespace robnash {

double deviation_margin(const FiniteGame& game, ProfileIndex x, Player i) {
  const auto& space = game.space();
  const Action current = space.action_at(x, i);
  const double here = game.utility(i, x);
  double chi = kNoDeviation;
  for (Action a = 0; a < game.action_count(i); ++a) {
    if (a == current) continue;
    chi = std::min(chi, here - game.utility(i, space.deviate(x, i, a)));
  }
  return chi;
}

double deviation_margin(const FiniteGame& game, const StrategyProfile& x, Player i) {
  game.validate_player(i);
  return deviation_margin(game, game.space().encode(x), i);
}

std::optional<Action> minimizing_deviation(const FiniteGame& game, const StrategyProfile& x,
                                           Player i) {
  game.validate_player(i);
  const auto& space = game.space();
  const ProfileIndex index = space.encode(x);
  const double here = game.utility(i, index);
  std::optional<Action> best;
  double best_gap = kNoDeviation;
  for (Action a = 0; a < game.action_count(i); ++a) {
    if (a == x[i]) continue;
    const double gap = here - game.utility(i, space.deviate(index, i, a));
    if (!best || gap < best_gap) {
      best = a;
      best_gap = gap;
    }
  }
  return best;
}

std::vector<double> deviation_margins(const FiniteGame& game, const StrategyProfile& x) {
  const ProfileIndex index = game.space().encode(x);
  std::vector<double> out(game.num_players());
  for (Player i = 0; i < game.num_players(); ++i) out[i] = deviation_margin(game, index, i);
  return out;
}

bool is_nash(const FiniteGame& game, ProfileIndex x, double tolerance) {
  for (Player i = 0; i < game.num_players(); ++i) {
    if (deviation_margin(game, x, i) < -tolerance) return false;
  }
  return true;
}

bool is_nash(const FiniteGame& game, const StrategyProfile& x, double tolerance) {
  return is_nash(game, game.space().encode(x), tolerance);
}

std::vector<StrategyProfile> enumerate_nash(const FiniteGame& game, std::uint64_t budget,
                                            double tolerance) {
  const auto n = game.space().size(budget);
  std::vector<StrategyProfile> out;
  for (ProfileIndex x = 0; x < n; ++x) {
    if (is_nash(game, x, tolerance)) out.push_back(game.space().decode(x));
  }
  return out;
}

double game_distance(const FiniteGame& u, const FiniteGame& v) {
  if (!u.same_shape(v)) {
    throw InputError("games are not comparable: player sets or action counts differ");
  }
  double d = 0.0;
  for (Player i = 0; i < u.num_players(); ++i) {
    const auto a = u.table(i);
    const auto b = v.table(i);
    for (std::size_t x = 0; x < a.size(); ++x) d = std::max(d, std::abs(a[x] - b[x]));
  }
  return d;
}

PotentialCertificate check_potential(const FiniteGame& game, std::uint64_t budget) {
  const auto& space = game.space();
  const auto n = space.size(budget);
  PotentialCertificate cert;
  cert.potential.assign(n, 0.0);

  // Each profile is reached from the profile that zeroes its first nonzero
  // coordinate, which has a smaller encoding and is already assigned.
  for (ProfileIndex x = 1; x < n; ++x) {
    Player k = 0;
    while (space.action_at(x, k) == 0) ++k;
    const ProfileIndex prev = space.deviate(x, k, 0);
    cert.potential[x] = cert.potential[prev] + game.utility(k, x) - game.utility(k, prev);
  }

  for (ProfileIndex x = 0; x < n; ++x) {
    for (Player i = 0; i < game.num_players(); ++i) {
      const Action current = space.action_at(x, i);
      for (Action a = 0; a < current; ++a) {
        const ProfileIndex y = space.deviate(x, i, a);
        const double du = game.utility(i, x) - game.utility(i, y);
        const double dphi = cert.potential[x] - cert.potential[y];
        if (std::abs(du - dphi) > kPotentialTolerance) return cert;
      }
    }
  }
  cert.verified = true;
  return cert;
}

}  // namespace robnash

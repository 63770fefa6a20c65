#include "robnash/subgames.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "robnash/nash.hpp"

namespace robnash {

namespace {

std::vector<std::size_t> counts_of(const ProfileSpace& full, const std::vector<Player>& players) {
  std::vector<std::size_t> out;
  out.reserve(players.size());
  for (Player p : players) out.push_back(full.action_count(p));
  return out;
}

// offsets[k] = contribution of local profile k of `sub` to the full encoding.
std::vector<ProfileIndex> full_offsets(const ProfileSpace& full, const ProfileSpace& sub,
                                       const std::vector<Player>& players, std::uint64_t budget) {
  const auto n = sub.size(budget);
  std::vector<ProfileIndex> out(n, 0);
  for (ProfileIndex k = 0; k < n; ++k) {
    ProfileIndex offset = 0;
    for (std::size_t j = 0; j < players.size(); ++j) {
      offset += sub.action_at(k, j) * full.stride(players[j]);
    }
    out[k] = offset;
  }
  return out;
}

void check_restricted_shape(const FiniteGame& u, const RestrictedGame& v) {
  if (v.players.empty() || !std::is_sorted(v.players.begin(), v.players.end()) ||
      std::adjacent_find(v.players.begin(), v.players.end()) != v.players.end()) {
    throw InputError("restricted game must list a sorted, duplicate-free, non-empty player set");
  }
  if (v.players.back() >= u.num_players()) {
    throw InputError("restricted game names a player outside the base game");
  }
  if (v.game.space().action_counts() != counts_of(u.space(), v.players)) {
    throw InputError("restricted game action counts do not match the base game");
  }
}

}  // namespace

PartitionContext::PartitionContext(const ProfileSpace& full, std::vector<Player> restricted)
    : full_(full), restricted_(std::move(restricted)), member_(full.num_players(), false) {
  if (restricted_.empty()) throw InputError("the restricted player set R must be non-empty");
  std::sort(restricted_.begin(), restricted_.end());
  if (std::adjacent_find(restricted_.begin(), restricted_.end()) != restricted_.end()) {
    throw InputError("the restricted player set R lists a player twice");
  }
  for (Player p : restricted_) {
    if (p >= full.num_players()) {
      throw InputError("player " + std::to_string(p) + " in R does not exist");
    }
    member_[p] = true;
  }
  for (Player p = 0; p < full.num_players(); ++p) {
    if (!member_[p]) complement_.push_back(p);
  }
  restricted_space_ = ProfileSpace(counts_of(full_, restricted_));
  complement_space_ = ProfileSpace(counts_of(full_, complement_));
}

std::pair<StrategyProfile, StrategyProfile> PartitionContext::split(
    const StrategyProfile& x) const {
  full_.validate(x);
  return {x.project(restricted_), x.project(complement_)};
}

StrategyProfile PartitionContext::join(const StrategyProfile& y,
                                       const StrategyProfile& z) const {
  restricted_space_.validate(y);
  complement_space_.validate(z);
  std::vector<Action> actions(full_.num_players());
  for (std::size_t k = 0; k < restricted_.size(); ++k) actions[restricted_[k]] = y[k];
  for (std::size_t k = 0; k < complement_.size(); ++k) actions[complement_[k]] = z[k];
  return StrategyProfile(std::move(actions));
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::kFrozen: return "frozen";
    case Provenance::kAveraged: return "averaged";
    case Provenance::kExternal: return "external";
  }
  return "external";
}

std::string to_string(CertificateMode m) {
  return m == CertificateMode::kSufficient ? "sufficient" : "brute-force";
}

RestrictedGame freeze(const FiniteGame& game, const PartitionContext& ctx,
                      const StrategyProfile& z) {
  if (!(ctx.full_space() == game.space())) {
    throw InputError("partition was built for a different profile space");
  }
  ctx.complement_space().validate(z);
  const auto& r = ctx.restricted();
  const auto ny = ctx.restricted_space().size(std::numeric_limits<std::uint64_t>::max());
  const auto y_offsets = full_offsets(game.space(), ctx.restricted_space(), r,
                                      std::numeric_limits<std::uint64_t>::max());
  ProfileIndex z_offset = 0;
  for (std::size_t k = 0; k < ctx.complement().size(); ++k) {
    z_offset += z[k] * game.space().stride(ctx.complement()[k]);
  }
  std::vector<std::vector<double>> tables(r.size(), std::vector<double>(ny));
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (ProfileIndex y = 0; y < ny; ++y) tables[k][y] = game.utility(r[k], y_offsets[y] + z_offset);
  }
  return RestrictedGame{
      FiniteGame(ctx.restricted_space().action_counts(), std::move(tables),
                 std::numeric_limits<std::uint64_t>::max()),
      r, Provenance::kFrozen, z};
}

RestrictedGame average_over_complement(const FiniteGame& game, const PartitionContext& ctx,
                                       std::uint64_t budget) {
  if (!(ctx.full_space() == game.space())) {
    throw InputError("partition was built for a different profile space");
  }
  const auto& r = ctx.restricted();
  const auto nz = ctx.complement_space().size(budget);
  const auto ny = ctx.restricted_space().size(std::numeric_limits<std::uint64_t>::max());
  const auto y_offsets = full_offsets(game.space(), ctx.restricted_space(), r,
                                      std::numeric_limits<std::uint64_t>::max());
  const auto z_offsets = full_offsets(game.space(), ctx.complement_space(), ctx.complement(), budget);
  std::vector<std::vector<double>> tables(r.size(), std::vector<double>(ny, 0.0));
  for (std::size_t k = 0; k < r.size(); ++k) {
    for (ProfileIndex y = 0; y < ny; ++y) {
      double sum = 0.0;
      for (ProfileIndex z = 0; z < nz; ++z) sum += game.utility(r[k], y_offsets[y] + z_offsets[z]);
      tables[k][y] = sum / static_cast<double>(nz);
    }
  }
  return RestrictedGame{
      FiniteGame(ctx.restricted_space().action_counts(), std::move(tables),
                 std::numeric_limits<std::uint64_t>::max()),
      r, Provenance::kAveraged, std::nullopt};
}

double restricted_player_distance(const FiniteGame& u, const RestrictedGame& v,
                                  std::size_t local_player) {
  check_restricted_shape(u, v);
  if (local_player >= v.players.size()) throw InputError("local player index out of range");
  const Player i = v.players[local_player];
  const auto& full = u.space();
  const auto& sub = v.game.space();
  double d = 0.0;
  for (ProfileIndex x = 0; x < u.profile_count(); ++x) {
    ProfileIndex y = 0;
    for (std::size_t k = 0; k < v.players.size(); ++k) {
      y += full.action_at(x, v.players[k]) * sub.stride(k);
    }
    d = std::max(d, std::abs(u.utility(i, x) - v.game.utility(local_player, y)));
  }
  return d;
}

double game_distance(const FiniteGame& u, const RestrictedGame& v) {
  check_restricted_shape(u, v);
  double d = 0.0;
  for (std::size_t k = 0; k < v.players.size(); ++k) {
    d = std::max(d, restricted_player_distance(u, v, k));
  }
  return d;
}

CertificateResult uniform_nash_certificate(const FiniteGame& game, const PartitionContext& ctx,
                                           const StrategyProfile& y, CertificateMode mode,
                                           std::uint64_t budget) {
  ctx.restricted_space().validate(y);
  CertificateResult result;
  result.mode = mode;
  result.players = ctx.restricted();
  const std::size_t nr = ctx.restricted().size();

  if (mode == CertificateMode::kSufficient) {
    game.space().size(budget);
    const auto avg = average_over_complement(game, ctx, budget);
    result.nash_of_average = is_nash(avg.game, y);
    result.slack.resize(nr);
    bool ok = result.nash_of_average;
    for (std::size_t k = 0; k < nr; ++k) {
      const double chi = deviation_margin(avg.game, y, k);
      result.slack[k] = chi - 2.0 * restricted_player_distance(game, avg, k);
      if (!(result.slack[k] >= 0.0)) ok = false;
    }
    result.certified = ok;
    result.threshold = "2*||u_i-avg_i||";
    return result;
  }

  const auto nz = ctx.complement_space().size(budget);
  result.slack.assign(nr, kNoDeviation);
  for (ProfileIndex zi = 0; zi < nz; ++zi) {
    const auto z = ctx.complement_space().decode(zi);
    const auto frozen = freeze(game, ctx, z);
    const auto yi = frozen.game.space().encode(y);
    bool nash_here = true;
    for (std::size_t k = 0; k < nr; ++k) {
      const double chi = deviation_margin(frozen.game, yi, k);
      result.slack[k] = std::min(result.slack[k], chi);
      if (chi < 0.0) nash_here = false;
    }
    if (!nash_here && !result.counterexample) result.counterexample = z;
  }
  result.certified = !result.counterexample.has_value();
  result.threshold = "0";
  return result;
}

}  // namespace robnash

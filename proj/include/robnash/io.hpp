#pragma once

// Game documents (JSON), report serialization, DOT rendering and CSV tables.
//
// Every JSON string produced here is canonical: object keys sorted,
// two-space indentation, integers verbatim and other numbers printed with
// 12 significant digits. Infinite values are written as null.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "robnash/game.hpp"
#include "robnash/network.hpp"
#include "robnash/robustness.hpp"
#include "robnash/subgames.hpp"

namespace robnash {

inline constexpr std::string_view kFormatVersion = "1.0";

struct NormalFormPayload {
  std::vector<std::size_t> action_counts;
  std::vector<std::vector<double>> utilities;
  friend bool operator==(const NormalFormPayload&, const NormalFormPayload&) = default;
};

struct PairwisePayload {
  Graph graph;
  std::vector<std::size_t> action_counts;
  std::map<std::pair<Node, Node>, EdgeTable> edge_tables;
  friend bool operator==(const PairwisePayload&, const PairwisePayload&) = default;
};

struct CoordAnticoordPayload {
  Graph graph;
  SpinAssignment xi;
  friend bool operator==(const CoordAnticoordPayload&, const CoordAnticoordPayload&) = default;
};

struct PublicGoodPayload {
  Graph graph;
  double cost = 0.0;
  friend bool operator==(const PublicGoodPayload&, const PublicGoodPayload&) = default;
};

struct PrisonerPayload {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  friend bool operator==(const PrisonerPayload&, const PrisonerPayload&) = default;
};

struct GameDocument {
  std::string format_version{kFormatVersion};
  std::variant<NormalFormPayload, PairwisePayload, CoordAnticoordPayload, PublicGoodPayload,
               PrisonerPayload>
      payload;

  /// "normal-form", "pairwise-network", "coord-anticoord", "public-good" or "prisoner".
  std::string kind() const;
  /// The graph of network-shaped kinds.
  const Graph* graph() const;
  std::size_t num_players() const;

  friend bool operator==(const GameDocument&, const GameDocument&) = default;
};

/// Validates and parses a document. Schema violations raise InputError
/// whose message starts with the JSON path of the offending key.
GameDocument parse_game_document(std::string_view text);
GameDocument load_game_document(const std::string& path);
std::string serialize(const GameDocument& doc);

/// Dense realization of any document kind.
FiniteGame to_finite_game(const GameDocument& doc, std::uint64_t budget = kDefaultProfileBudget);
/// Network realization of pairwise and coord-anticoord documents.
std::optional<PairwiseNetworkGame> to_network_game(const GameDocument& doc);

/// How profiles are written: +1/-1 tokens for binary spin games, action
/// indices otherwise.
enum class ProfileNotation { kSpin, kIndex };
ProfileNotation notation_for(const GameDocument& doc);

/// Comma-separated tokens, e.g. "+1,-1,+1" or "0,2,1". An empty string
/// is the empty profile.
StrategyProfile parse_profile(std::string_view text, ProfileNotation notation);
std::string format_profile(const StrategyProfile& x, ProfileNotation notation);
/// Comma-separated non-negative indices.
std::vector<std::size_t> parse_index_list(std::string_view text);

/// 12 significant digits, "0" for zero, "null" for non-finite values.
std::string format_real(double v);

/// Writes JSON in canonical form.
std::string dump_canonical(const nlohmann::json& value);

nlohmann::json profile_json(const StrategyProfile& x, ProfileNotation notation);
nlohmann::json to_json(const RobustnessReport& report, ProfileNotation notation);
nlohmann::json to_json(const FuzzReport& report, ProfileNotation notation);
nlohmann::json to_json(const CertificateResult& result, ProfileNotation notation);
nlohmann::json to_json(const RestrictedGame& game, ProfileNotation notation);
nlohmann::json to_json(const CohesionResult& result);
nlohmann::json to_json(const MixedNashOutcome& outcome, ProfileNotation notation);
nlohmann::json perturbation_json(const Perturbation& delta, ProfileNotation notation);

/// Per-player deviation margins as CSV with columns player,chi,binding.
std::string chi_csv(const std::vector<double>& chi);

struct DotStyle {
  /// Coordinating/anti-coordinating labels, when the game has them.
  std::optional<SpinAssignment> spins;
  ProfileNotation notation = ProfileNotation::kIndex;
};

/// Renders the graph with one node per player. Coordinating nodes are
/// filled green and drawn as boxes, anti-coordinating ones use the default
/// ellipse. The border color encodes the action and the label is "i:chi=v".
std::string to_dot(const Graph& graph, const StrategyProfile& x, const std::vector<double>& chi,
                   const DotStyle& style);

}  // namespace robnash

#include "robnash/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "robnash/nash.hpp"

namespace robnash {

using nlohmann::json;

namespace {

// Walks a parsed document while tracking the JSON path for error messages.
class Reader {
 public:
  Reader(const json& value, std::string path) : value_(value), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(path_ + ": " + what);
  }

  void expect_object(const std::set<std::string>& allowed) const {
    if (!value_.is_object()) fail("expected an object");
    for (const auto& [key, _] : value_.items()) {
      if (!allowed.count(key)) fail("unknown key \"" + key + "\"");
    }
  }

  bool has(const std::string& key) const { return value_.contains(key); }

  Reader operator[](const std::string& key) const {
    if (!value_.is_object()) fail("expected an object");
    auto it = value_.find(key);
    if (it == value_.end()) fail("missing required key \"" + key + "\"");
    return Reader(*it, path_ + "." + key);
  }

  std::size_t size() const {
    if (!value_.is_array()) fail("expected an array");
    return value_.size();
  }

  Reader operator[](std::size_t index) const {
    return Reader(value_.at(index), path_ + "[" + std::to_string(index) + "]");
  }

  double number() const {
    if (!value_.is_number()) fail("expected a number");
    const double v = value_.get<double>();
    if (!std::isfinite(v)) fail("expected a finite number");
    return v;
  }

  long long integer() const {
    if (!value_.is_number_integer()) fail("expected an integer");
    return value_.get<long long>();
  }

  std::size_t count(std::size_t minimum) const {
    const auto v = integer();
    if (v < static_cast<long long>(minimum)) {
      fail("expected an integer >= " + std::to_string(minimum));
    }
    return static_cast<std::size_t>(v);
  }

  bool boolean() const {
    if (!value_.is_boolean()) fail("expected a boolean");
    return value_.get<bool>();
  }

  std::string string() const {
    if (!value_.is_string()) fail("expected a string");
    return value_.get<std::string>();
  }

 private:
  const json& value_;
  std::string path_;
};

std::vector<std::size_t> read_counts(const Reader& r) {
  std::vector<std::size_t> out(r.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = r[k].count(1);
  return out;
}

Graph read_graph(const Reader& r) {
  r.expect_object({"nodes", "directed", "edges"});
  const auto n = r["nodes"].count(1);
  const bool directed = r.has("directed") ? r["directed"].boolean() : false;
  Graph g(n, directed);
  const auto edges = r["edges"];
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto e = edges[k];
    e.expect_object({"source", "target", "weight"});
    const auto i = e["source"].count(0);
    const auto j = e["target"].count(0);
    const double w = e.has("weight") ? e["weight"].number() : 1.0;
    try {
      g.add_edge(i, j, w);
    } catch (const InputError& err) {
      e.fail(err.what());
    }
  }
  return g;
}

json write_graph(const Graph& g) {
  json edges = json::array();
  for (Node i = 0; i < g.num_nodes(); ++i) {
    for (const auto& arc : g.neighbors(i)) {
      if (!g.directed() && arc.target < i) continue;
      edges.push_back({{"source", i}, {"target", arc.target}, {"weight", arc.weight}});
    }
  }
  return {{"nodes", g.num_nodes()}, {"directed", g.directed()}, {"edges", edges}};
}

json table_rows(const EdgeTable& t) {
  json rows = json::array();
  for (std::size_t a = 0; a < t.rows; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < t.cols; ++b) row.push_back(t(a, b));
    rows.push_back(row);
  }
  return rows;
}

bool is_scalar(const json& v) { return !v.is_object() && !v.is_array(); }

void dump_into(const json& v, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::null: out += "null"; return;
    case json::value_t::boolean: out += v.get<bool>() ? "true" : "false"; return;
    case json::value_t::number_integer: out += std::to_string(v.get<long long>()); return;
    case json::value_t::number_unsigned:
      out += std::to_string(v.get<unsigned long long>());
      return;
    case json::value_t::number_float: out += format_real(v.get<double>()); return;
    case json::value_t::string: out += v.dump(); return;
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      if (std::all_of(v.begin(), v.end(), is_scalar)) {
        out += "[";
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (k) out += ", ";
          dump_into(v[k], out, indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t k = 0; k < v.size(); ++k) {
        out += inner;
        dump_into(v[k], out, indent + 1);
        out += k + 1 < v.size() ? ",\n" : "\n";
      }
      out += pad + "]";
      return;
    }
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t k = 0;
      for (const auto& [key, value] : v.items()) {
        out += inner + json(key).dump() + ": ";
        dump_into(value, out, indent + 1);
        out += ++k < v.size() ? ",\n" : "\n";
      }
      out += pad + "}";
      return;
    }
    default: out += "null"; return;
  }
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json numbers(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(number_or_null(v));
  return out;
}

json normal_form_json(const FiniteGame& g) {
  json utilities = json::array();
  for (Player i = 0; i < g.num_players(); ++i) {
    const auto t = g.table(i);
    utilities.push_back(std::vector<double>(t.begin(), t.end()));
  }
  return {{"format_version", kFormatVersion},
          {"kind", "normal-form"},
          {"action_counts", g.space().action_counts()},
          {"utilities", utilities}};
}

}  // namespace

std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string GameDocument::kind() const {
  switch (payload.index()) {
    case 0: return "normal-form";
    case 1: return "pairwise-network";
    case 2: return "coord-anticoord";
    case 3: return "public-good";
    default: return "prisoner";
  }
}

const Graph* GameDocument::graph() const {
  if (auto p = std::get_if<PairwisePayload>(&payload)) return &p->graph;
  if (auto p = std::get_if<CoordAnticoordPayload>(&payload)) return &p->graph;
  if (auto p = std::get_if<PublicGoodPayload>(&payload)) return &p->graph;
  return nullptr;
}

std::size_t GameDocument::num_players() const {
  if (auto p = std::get_if<NormalFormPayload>(&payload)) return p->action_counts.size();
  if (std::holds_alternative<PrisonerPayload>(payload)) return 2;
  return graph()->num_nodes();
}

GameDocument parse_game_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("$: malformed JSON: ") + e.what());
  }
  const Reader r(root, "$");
  if (!root.is_object()) r.fail("expected an object");
  GameDocument doc;
  doc.format_version = r["format_version"].string();
  if (doc.format_version != kFormatVersion) {
    r["format_version"].fail("unsupported format version \"" + doc.format_version + "\"");
  }
  const auto kind = r["kind"].string();

  if (kind == "normal-form") {
    r.expect_object({"format_version", "kind", "action_counts", "utilities"});
    NormalFormPayload p;
    p.action_counts = read_counts(r["action_counts"]);
    if (p.action_counts.empty()) r["action_counts"].fail("a game needs at least one player");
    const auto u = r["utilities"];
    p.utilities.resize(u.size());
    for (std::size_t i = 0; i < p.utilities.size(); ++i) {
      const auto row = u[i];
      p.utilities[i].resize(row.size());
      for (std::size_t k = 0; k < p.utilities[i].size(); ++k) p.utilities[i][k] = row[k].number();
    }
    try {
      FiniteGame(p.action_counts, p.utilities);
    } catch (const InputError& e) {
      u.fail(e.what());
    }
    doc.payload = std::move(p);
  } else if (kind == "pairwise-network") {
    r.expect_object({"format_version", "kind", "graph", "action_counts", "edge_utilities"});
    PairwisePayload p;
    p.graph = read_graph(r["graph"]);
    p.action_counts = read_counts(r["action_counts"]);
    if (p.action_counts.size() != p.graph.num_nodes()) {
      r["action_counts"].fail("expected one action count per node");
    }
    const auto edges = r["edge_utilities"];
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const auto e = edges[k];
      e.expect_object({"source", "target", "table"});
      const auto i = e["source"].count(0);
      const auto j = e["target"].count(0);
      if (i >= p.graph.num_nodes() || j >= p.graph.num_nodes() || !p.graph.has_edge(i, j)) {
        e.fail("no such edge in the graph");
      }
      const auto t = e["table"];
      if (t.size() != p.action_counts[i]) e["table"].fail("expected one row per action of source");
      std::vector<double> values;
      for (std::size_t a = 0; a < t.size(); ++a) {
        const auto row = t[a];
        if (row.size() != p.action_counts[j]) row.fail("expected one entry per action of target");
        for (std::size_t b = 0; b < row.size(); ++b) values.push_back(row[b].number());
      }
      if (!p.edge_tables.emplace(std::pair{i, j}, EdgeTable(t.size(), p.action_counts[j], values))
               .second) {
        e.fail("duplicate table for this edge");
      }
    }
    try {
      build_pairwise(p.graph, p.action_counts, p.edge_tables);
    } catch (const InputError& err) {
      edges.fail(err.what());
    }
    doc.payload = std::move(p);
  } else if (kind == "coord-anticoord") {
    r.expect_object({"format_version", "kind", "graph", "xi"});
    CoordAnticoordPayload p;
    p.graph = read_graph(r["graph"]);
    if (p.graph.directed()) r["graph"]["directed"].fail("coord-anticoord needs an undirected graph");
    const auto xi = r["xi"];
    if (xi.size() != p.graph.num_nodes()) xi.fail("expected one spin per node");
    std::vector<int> spins(xi.size());
    for (std::size_t k = 0; k < spins.size(); ++k) {
      const auto v = xi[k].integer();
      if (v != 1 && v != -1) xi[k].fail("spin must be +1 or -1");
      spins[k] = static_cast<int>(v);
    }
    p.xi = SpinAssignment(std::move(spins));
    doc.payload = std::move(p);
  } else if (kind == "public-good") {
    r.expect_object({"format_version", "kind", "graph", "c"});
    PublicGoodPayload p;
    p.graph = read_graph(r["graph"]);
    p.cost = r["c"].number();
    if (!(p.cost > 0.0 && p.cost < 1.0)) r["c"].fail("violates 0 < c < 1");
    doc.payload = std::move(p);
  } else if (kind == "prisoner") {
    r.expect_object({"format_version", "kind", "a", "b", "c", "d"});
    PrisonerPayload p{r["a"].number(), r["b"].number(), r["c"].number(), r["d"].number()};
    if (!(p.c > p.b && p.b > p.a && p.a > p.d)) r.fail("payoffs violate c > b > a > d");
    doc.payload = p;
  } else {
    r["kind"].fail("unknown kind \"" + kind + "\"");
  }
  return doc;
}

GameDocument load_game_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_game_document(buf.str());
}

std::string serialize(const GameDocument& doc) {
  json root{{"format_version", doc.format_version}, {"kind", doc.kind()}};
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NormalFormPayload>) {
          root["action_counts"] = p.action_counts;
          root["utilities"] = p.utilities;
        } else if constexpr (std::is_same_v<T, PairwisePayload>) {
          root["graph"] = write_graph(p.graph);
          root["action_counts"] = p.action_counts;
          json edges = json::array();
          for (const auto& [arc, t] : p.edge_tables) {
            edges.push_back({{"source", arc.first}, {"target", arc.second}, {"table", table_rows(t)}});
          }
          root["edge_utilities"] = edges;
        } else if constexpr (std::is_same_v<T, CoordAnticoordPayload>) {
          root["graph"] = write_graph(p.graph);
          root["xi"] = p.xi.values();
        } else if constexpr (std::is_same_v<T, PublicGoodPayload>) {
          root["graph"] = write_graph(p.graph);
          root["c"] = p.cost;
        } else {
          root["a"] = p.a;
          root["b"] = p.b;
          root["c"] = p.c;
          root["d"] = p.d;
        }
      },
      doc.payload);
  return dump_canonical(root);
}

FiniteGame to_finite_game(const GameDocument& doc, std::uint64_t budget) {
  return std::visit(
      [&](const auto& p) -> FiniteGame {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, NormalFormPayload>) {
          return FiniteGame(p.action_counts, p.utilities, budget);
        } else if constexpr (std::is_same_v<T, PublicGoodPayload>) {
          return public_good_game(p.graph, p.cost, budget);
        } else if constexpr (std::is_same_v<T, PrisonerPayload>) {
          return prisoners_dilemma(p.a, p.b, p.c, p.d);
        } else {
          return to_network_game(doc)->to_finite_game(budget);
        }
      },
      doc.payload);
}

std::optional<PairwiseNetworkGame> to_network_game(const GameDocument& doc) {
  if (auto p = std::get_if<PairwisePayload>(&doc.payload)) {
    return build_pairwise(p->graph, p->action_counts, p->edge_tables);
  }
  if (auto p = std::get_if<CoordAnticoordPayload>(&doc.payload)) {
    return coord_anticoord(p->graph, p->xi);
  }
  return std::nullopt;
}

ProfileNotation notation_for(const GameDocument& doc) {
  return std::holds_alternative<CoordAnticoordPayload>(doc.payload) ||
                 std::holds_alternative<PrisonerPayload>(doc.payload)
             ? ProfileNotation::kSpin
             : ProfileNotation::kIndex;
}

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    const auto b = current.find_first_not_of(" \t");
    const auto e = current.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : current.substr(b, e - b + 1));
    current.clear();
  };
  if (text.find_first_not_of(" \t") == std::string_view::npos) return out;
  for (char ch : text) {
    if (ch == ',') {
      flush();
    } else {
      current += ch;
    }
  }
  flush();
  return out;
}

std::size_t parse_index(const std::string& token) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("\"" + token + "\" is not a non-negative integer");
  }
  return static_cast<std::size_t>(std::stoull(token));
}

}  // namespace

StrategyProfile parse_profile(std::string_view text, ProfileNotation notation) {
  std::vector<Action> actions;
  for (const auto& token : split_tokens(text)) {
    if (notation == ProfileNotation::kSpin) {
      if (token == "+1" || token == "1") {
        actions.push_back(1);
      } else if (token == "-1") {
        actions.push_back(0);
      } else {
        throw InputError("\"" + token + "\" is not a spin; use +1 or -1");
      }
    } else {
      actions.push_back(parse_index(token));
    }
  }
  return StrategyProfile(std::move(actions));
}

std::string format_profile(const StrategyProfile& x, ProfileNotation notation) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k) out += ",";
    if (notation == ProfileNotation::kSpin) {
      out += x[k] == 1 ? "+1" : "-1";
    } else {
      out += std::to_string(x[k]);
    }
  }
  return out;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (const auto& token : split_tokens(text)) out.push_back(parse_index(token));
  return out;
}

std::string dump_canonical(const json& value) {
  std::string out;
  dump_into(value, out, 0);
  out += "\n";
  return out;
}

json profile_json(const StrategyProfile& x, ProfileNotation notation) {
  json out = json::array();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (notation == ProfileNotation::kSpin) {
      out.push_back(spin_of(x[k]));
    } else {
      out.push_back(x[k]);
    }
  }
  return out;
}

json to_json(const RobustnessReport& report, ProfileNotation notation) {
  return {{"profile", profile_json(report.profile, notation)},
          {"per_player_chi", numbers(report.per_player_chi)},
          {"margin", number_or_null(report.margin)},
          {"binding_players", report.binding_players}};
}

json to_json(const FuzzReport& report, ProfileNotation notation) {
  json regimes = json::array();
  bool passed = true;
  for (const auto& r : report.regimes) {
    regimes.push_back({{"name", r.name},
                       {"magnitude", number_or_null(r.magnitude)},
                       {"samples", r.samples},
                       {"breaks", r.breaks}});
    if (r.name == "inside" && r.breaks != 0) passed = false;
  }
  return {{"profile", profile_json(report.profile, notation)},
          {"margin", number_or_null(report.margin)},
          {"epsilon", report.epsilon},
          {"seed", report.seed},
          {"regimes", regimes},
          {"passed", passed}};
}

json to_json(const CertificateResult& result, ProfileNotation notation) {
  json out{{"certified", result.certified},
           {"mode", to_string(result.mode)},
           {"players", result.players},
           {"slack", numbers(result.slack)},
           {"threshold", result.threshold}};
  if (result.mode == CertificateMode::kSufficient) out["nash_of_average"] = result.nash_of_average;
  out["counterexample"] =
      result.counterexample ? profile_json(*result.counterexample, notation) : json(nullptr);
  return out;
}

json to_json(const RestrictedGame& game, ProfileNotation notation) {
  json out{{"players", game.players},
           {"provenance", to_string(game.provenance)},
           {"game", normal_form_json(game.game)}};
  if (game.frozen_at) out["frozen_at"] = profile_json(*game.frozen_at, notation);
  return out;
}

json to_json(const CohesionResult& result) {
  return {{"cohesive", result.cohesive}, {"nodes", result.nodes}, {"slack", result.slack}};
}

json to_json(const MixedNashOutcome& outcome, ProfileNotation notation) {
  json out{{"status", to_string(outcome.status)},
           {"sign", outcome.sign},
           {"method", outcome.method},
           {"block_potential", outcome.block_potential}};
  out["profile"] = outcome.profile ? profile_json(*outcome.profile, notation) : json(nullptr);
  out["cohesion"] = outcome.cohesion ? to_json(*outcome.cohesion) : json(nullptr);
  out["coupling"] = outcome.coupling ? to_json(*outcome.coupling, notation) : json(nullptr);
  return out;
}

json perturbation_json(const Perturbation& delta, ProfileNotation notation) {
  json entries = json::array();
  const auto n = delta.space().checked_size().value_or(0);
  for (Player i = 0; i < delta.num_players(); ++i) {
    for (ProfileIndex x = 0; x < n; ++x) {
      if (delta.at(i, x) != 0.0) {
        entries.push_back({{"player", i},
                           {"profile", profile_json(delta.space().decode(x), notation)},
                           {"delta", delta.at(i, x)}});
      }
    }
  }
  return {{"norm", delta.norm()}, {"entries", entries}};
}

std::string chi_csv(const std::vector<double>& chi) {
  const double lowest = chi.empty() ? 0.0 : *std::min_element(chi.begin(), chi.end());
  std::string out = "player,chi,binding\n";
  for (std::size_t i = 0; i < chi.size(); ++i) {
    out += std::to_string(i) + "," + (std::isfinite(chi[i]) ? format_real(chi[i]) : "inf") +
           "," + (chi[i] == lowest ? "true" : "false") + "\n";
  }
  return out;
}

std::string to_dot(const Graph& graph, const StrategyProfile& x, const std::vector<double>& chi,
                   const DotStyle& style) {
  static const char* kPalette[] = {"red", "blue", "orange", "purple", "brown", "gray"};
  if (x.size() != graph.num_nodes() || chi.size() != graph.num_nodes()) {
    throw InputError("profile and margins must have one entry per node");
  }
  const bool directed = graph.directed();
  std::string out = directed ? "digraph G {\n" : "graph G {\n";
  out += "  node [style=filled, fillcolor=white, penwidth=2];\n";
  for (Node i = 0; i < graph.num_nodes(); ++i) {
    const std::string value = std::isfinite(chi[i]) ? format_real(chi[i]) : "inf";
    const char* color = style.notation == ProfileNotation::kSpin
                            ? (x[i] == 1 ? "blue" : "red")
                            : kPalette[x[i] % std::size(kPalette)];
    out += "  " + std::to_string(i) + " [label=\"" + std::to_string(i) + ":\xCF\x87=" + value +
           "\", color=" + color;
    if (style.spins && (*style.spins)[i] == 1) out += ", shape=box, fillcolor=green";
    out += "];\n";
  }
  const std::string arrow = directed ? " -> " : " -- ";
  for (Node i = 0; i < graph.num_nodes(); ++i) {
    for (const auto& arc : graph.neighbors(i)) {
      if (!directed && arc.target < i) continue;
      out += "  " + std::to_string(i) + arrow + std::to_string(arc.target);
      if (arc.weight != 1.0) out += " [label=\"" + format_real(arc.weight) + "\"]";
      out += ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace robnash

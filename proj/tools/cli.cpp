// robnash: robustness analysis of pure Nash equilibria from the command line.
//
// Usage: robnash <subcommand> <game.json> [args...]
//
// Every subcommand reads a game document and writes a canonical JSON report
// (or CSV/DOT where requested) to stdout.

#include "cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "robnash/io.hpp"
#include "robnash/nash.hpp"
#include "robnash/network.hpp"
#include "robnash/robustness.hpp"
#include "robnash/subgames.hpp"

namespace robnash::cli {

namespace {

using nlohmann::json;

struct Loaded {
  GameDocument doc;
  ProfileNotation notation;
};

Loaded load(const std::string& path) {
  auto doc = load_game_document(path);
  const auto notation = notation_for(doc);
  return {std::move(doc), notation};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

const Graph& require_graph(const GameDocument& doc) {
  const Graph* g = doc.graph();
  if (!g) throw InputError("subcommand needs a network game document (kind " + doc.kind() + ")");
  return *g;
}

PairwiseNetworkGame require_network(const GameDocument& doc) {
  auto g = to_network_game(doc);
  if (!g) {
    throw InputError("subcommand needs a pairwise-network or coord-anticoord document (kind " +
                     doc.kind() + ")");
  }
  return *std::move(g);
}

std::vector<double> margins_for(const GameDocument& doc, const StrategyProfile& x,
                                std::uint64_t budget) {
  if (auto net = to_network_game(doc)) {
    net->space().validate(x);
    std::vector<double> chi(net->num_players());
    for (Player i = 0; i < chi.size(); ++i) chi[i] = net->deviation_margin(i, x);
    return chi;
  }
  return deviation_margins(to_finite_game(doc, budget), x);
}

CertificateMode parse_mode(const std::string& s) {
  if (s == "sufficient") return CertificateMode::kSufficient;
  if (s == "brute-force") return CertificateMode::kBruteForce;
  throw InputError("unknown mode \"" + s + "\"");
}

CouplingThreshold parse_threshold(const std::string& s) {
  if (s == "nominal") return CouplingThreshold::kNominal;
  if (s == "conservative") return CouplingThreshold::kConservative;
  if (s == "exact") return CouplingThreshold::kExact;
  throw InputError("unknown threshold \"" + s + "\"");
}

int parse_sign(const std::string& s) {
  if (s == "+1" || s == "1" || s == "+") return 1;
  if (s == "-1" || s == "-") return -1;
  throw InputError("sign must be +1 or -1");
}

}  // namespace

int exit_code_for(const Error& e) {
  if (dynamic_cast<const InputError*>(&e)) return kValidationError;
  if (dynamic_cast<const CapacityError*>(&e)) return kCapacityError;
  if (dynamic_cast<const DomainError*>(&e)) return kDomainError;
  if (dynamic_cast<const InvariantViolation*>(&e)) return kInvariantViolation;
  return kValidationError;
}

std::string error_label(const Error& e) {
  switch (exit_code_for(e)) {
    case kCapacityError: return "capacity error";
    case kDomainError: return "domain error";
    case kInvariantViolation: return "invariant violation";
    default: return "error";
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robustness analysis of pure Nash equilibria in finite and network games",
               "robnash"};
  app.require_subcommand(1);

  std::string game_path;
  std::string profile_text;
  std::string format = "json";
  std::string partition_text;
  std::string z_text;
  std::string y_text;
  std::string subset_text;
  std::string mode = "sufficient";
  std::string threshold = "exact";
  std::string sign_text = "+1";
  std::string out_path;
  std::string dot_path;
  double epsilon = 1e-2;
  std::uint64_t samples = 500;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultProfileBudget;

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("game", game_path, "Game document (JSON)")->required();
    sub->add_option("--budget", budget, "Maximum number of joint profiles to enumerate");
  };
  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("profile", profile_text,
                    "Comma-separated profile: +1/-1 for spin games, action indices otherwise")
        ->required();
  };

  auto* nash = app.add_subcommand("nash", "Enumerate pure Nash equilibria");
  add_game(nash);
  nash->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* margin = app.add_subcommand("margin", "Margin of robustness of an equilibrium");
  add_game(margin);
  add_profile(margin);
  margin->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* brk = app.add_subcommand("break", "Emit a minimal perturbation breaking an equilibrium");
  add_game(brk);
  add_profile(brk);
  brk->add_option("--epsilon", epsilon, "Excess over the margin (> 0)");

  auto* fuzz = app.add_subcommand("fuzz", "Monte-Carlo validation of the margin");
  add_game(fuzz);
  add_profile(fuzz);
  fuzz->add_option("--samples", samples, "Samples per regime");
  fuzz->add_option("--seed", seed, "Generator seed");
  fuzz->add_option("--epsilon", epsilon, "Excess over the margin for the witness regime");

  auto* frz = app.add_subcommand("freeze", "Restrict to R with the complement frozen at z");
  add_game(frz);
  frz->add_option("--partition", partition_text, "Players in R, comma-separated")->required();
  frz->add_option("--z", z_text, "Profile of the complement");

  auto* avg = app.add_subcommand("average", "Average the game over the complement of R");
  add_game(avg);
  avg->add_option("--partition", partition_text, "Players in R, comma-separated")->required();

  auto* uni = app.add_subcommand("uniform-check", "Certify y as an equilibrium for every z");
  add_game(uni);
  uni->add_option("--partition", partition_text, "Players in R, comma-separated")->required();
  uni->add_option("--y", y_text, "Profile of R")->required();
  uni->add_option("--mode", mode, "sufficient or brute-force")
      ->check(CLI::IsMember({"sufficient", "brute-force"}));

  auto* cpl = app.add_subcommand("coupling", "Coupling screen between R and its complement");
  add_game(cpl);
  cpl->add_option("--partition", partition_text, "Players in R, comma-separated")->required();
  cpl->add_option("--y", y_text, "Profile of R")->required();
  cpl->add_option("--threshold", threshold, "nominal, conservative or exact")
      ->check(CLI::IsMember({"nominal", "conservative", "exact"}));

  auto* coh = app.add_subcommand("cohesive", "Check whether a node set is cohesive");
  add_game(coh);
  coh->add_option("--subset", subset_text, "Nodes, comma-separated")->required();

  auto* con = app.add_subcommand("construct",
                                 "Build an equilibrium of a mixed coordination game from a "
                                 "cohesive coordinating set");
  add_game(con);
  con->add_option("--sign", sign_text, "Consensus sign on coordinating nodes (+1 or -1)");
  con->add_option("--seed", seed, "Seed for best-response starts on large blocks");
  con->add_option("--dot", dot_path, "Also write a DOT rendering of the result");

  auto* pot = app.add_subcommand("potential", "Check for an exact potential and recover it");
  add_game(pot);

  auto* dot = app.add_subcommand("export-dot", "Render a profile on the game graph");
  add_game(dot);
  add_profile(dot);
  dot->add_option("--out", out_path, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    const auto [doc, notation] = load(game_path);

    if (nash->parsed()) {
      const auto game = to_finite_game(doc, budget);
      const auto equilibria = enumerate_nash(game, budget);
      if (format == "csv") {
        out << "equilibrium,profile,margin\n";
        for (std::size_t k = 0; k < equilibria.size(); ++k) {
          const auto report = margin_of_robustness(game, equilibria[k]);
          out << k << ",\"" << format_profile(equilibria[k], notation) << "\","
              << format_real(report.margin) << "\n";
        }
        return kOk;
      }
      json list = json::array();
      for (const auto& x : equilibria) {
        list.push_back(to_json(margin_of_robustness(game, x), notation));
      }
      out << dump_canonical({{"count", equilibria.size()}, {"equilibria", list}});
      return kOk;
    }

    if (margin->parsed()) {
      const auto game = to_finite_game(doc, budget);
      const auto report = margin_of_robustness(game, parse_profile(profile_text, notation));
      if (format == "csv") {
        out << chi_csv(report.per_player_chi);
      } else {
        out << dump_canonical(to_json(report, notation));
      }
      return kOk;
    }

    if (brk->parsed()) {
      const auto game = to_finite_game(doc, budget);
      const auto x = parse_profile(profile_text, notation);
      const auto report = margin_of_robustness(game, x);
      const auto delta = construct_breaking_perturbation(game, x, epsilon);
      const bool still = is_nash(delta.apply_to(game), x);
      if (still) throw InvariantViolation("constructed perturbation failed to break the equilibrium");
      out << dump_canonical({{"profile", profile_json(x, notation)},
                             {"margin", report.margin},
                             {"epsilon", epsilon},
                             {"perturbation", perturbation_json(delta, notation)},
                             {"still_nash", still}});
      return kOk;
    }

    if (fuzz->parsed()) {
      const auto game = to_finite_game(doc, budget);
      const auto report =
          fuzz_margin(game, parse_profile(profile_text, notation), samples, seed, epsilon);
      out << dump_canonical(to_json(report, notation));
      return kOk;
    }

    if (frz->parsed() || avg->parsed() || uni->parsed()) {
      const auto game = to_finite_game(doc, budget);
      const PartitionContext ctx(game.space(), parse_index_list(partition_text));
      if (frz->parsed()) {
        out << dump_canonical(to_json(freeze(game, ctx, parse_profile(z_text, notation)), notation));
      } else if (avg->parsed()) {
        out << dump_canonical(to_json(average_over_complement(game, ctx, budget), notation));
      } else {
        const auto result = uniform_nash_certificate(game, ctx, parse_profile(y_text, notation),
                                                     parse_mode(mode), budget);
        out << dump_canonical(to_json(result, notation));
      }
      return kOk;
    }

    if (cpl->parsed()) {
      const auto net = require_network(doc);
      const PartitionContext ctx(net.space(), parse_index_list(partition_text));
      const auto result = coupling_condition(net, ctx, parse_profile(y_text, notation),
                                             parse_threshold(threshold));
      out << dump_canonical(to_json(result, notation));
      return kOk;
    }

    if (coh->parsed()) {
      const auto& graph = require_graph(doc);
      out << dump_canonical(to_json(is_cohesive(graph, parse_index_list(subset_text))));
      return kOk;
    }

    if (con->parsed()) {
      const auto* p = std::get_if<CoordAnticoordPayload>(&doc.payload);
      if (!p) throw InputError("construct needs a coord-anticoord document");
      MixedNashOptions options;
      options.seed = seed;
      const auto outcome = construct_mixed_nash(p->graph, p->xi, parse_sign(sign_text), options);
      out << dump_canonical(to_json(outcome, notation));
      if (!dot_path.empty() && outcome.profile) {
        const auto net = coord_anticoord(p->graph, p->xi);
        std::vector<double> chi(net.num_players());
        for (Player i = 0; i < chi.size(); ++i) chi[i] = net.deviation_margin(i, *outcome.profile);
        write_file(dot_path, to_dot(p->graph, *outcome.profile, chi, {p->xi, notation}));
      }
      return kOk;
    }

    if (pot->parsed()) {
      const auto cert = check_potential(to_finite_game(doc, budget), budget);
      json body{{"verified", cert.verified}};
      body["potential"] = cert.verified ? json(cert.potential) : json(nullptr);
      out << dump_canonical(body);
      return kOk;
    }

    if (dot->parsed()) {
      const auto& graph = require_graph(doc);
      const auto x = parse_profile(profile_text, notation);
      DotStyle style;
      style.notation = notation;
      if (auto* p = std::get_if<CoordAnticoordPayload>(&doc.payload)) style.spins = p->xi;
      const auto text = to_dot(graph, x, margins_for(doc, x, budget), style);
      if (out_path.empty()) {
        out << text;
      } else {
        write_file(out_path, text);
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << error_label(e) << ": " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kUsageError;
}

}  // namespace robnash::cli

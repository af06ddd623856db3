// Copyright 2026 The GameHodge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
// Exit codes: 0 success, 2 parse error, 3 numeric failure or invariant
// violation, 4 precondition or unsupported shape.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gamehodge/decompose.h"
#include "gamehodge/equilibria.h"
#include "gamehodge/errors.h"
#include "gamehodge/flow.h"
#include "gamehodge/game.h"
#include "gamehodge/invariants.h"
#include "gamehodge/io.h"
#include "gamehodge/subspaces.h"

namespace gamehodge {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitPrecondition = 4;

struct CliConfig {
  std::string input;
  std::string out;
  double tol = kDefaultTolerance;
  std::uint64_t seed = 1;
  std::string onto = "potential";
  std::string to = "potential";
  double eps = 0.0;
  std::string format = "dot";
  bool transform = false;
  int players = 0;
  std::string counts;
};

void Emit(const CliConfig& config, const std::string& text) {
  if (config.out.empty()) {
    std::cout << text;
  } else {
    WriteText(config.out, text);
  }
}

void EmitJson(const CliConfig& config, const Json& doc) {
  Emit(config, doc.dump(2) + "\n");
}

int CmdDecompose(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  EmitJson(config, DecompositionToJson(Decompose(game, config.tol)));
  return kExitOk;
}

int CmdProject(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  if (config.onto == "potential") {
    EmitJson(config, GameToJson(ClosestPotential(game)));
  } else {
    EmitJson(config, GameToJson(ClosestHarmonic(game)));
  }
  return kExitOk;
}

int CmdEquilibria(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  EquilibriumReport report;
  report.pure_nash = PureNash(game);
  report.epsilon = config.eps;
  report.epsilon_equilibria = EpsilonEquilibria(game, config.eps);
  report.pareto_optimal = ParetoOptimal(game);
  report.uniform_mixed_is_ne =
      IsMixedNash(game, UniformlyMixed(game), config.tol);
  if (game.num_profiles() <= kMaxCorrelatedSystemProfiles &&
      IsHarmonic(game, config.tol)) {
    report.correlated_dim =
        HarmonicCorrelatedSystem(Normalize(game), config.tol).dimension;
  }
  EmitJson(config, EquilibriumReportToJson(game, report));
  return kExitOk;
}

int CmdPareto(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  Json out;
  if (config.transform) {
    const Game aligned = ParetoAlignTransform(game);
    out["game"] = GameToJson(aligned);
    out["pure_nash"] = ProfilesToJson(game.shape(), PureNash(aligned));
    out["pareto_optimal"] = ProfilesToJson(game.shape(), ParetoOptimal(aligned));
  } else {
    out["pareto_optimal"] = ProfilesToJson(game.shape(), ParetoOptimal(game));
  }
  EmitJson(config, out);
  return kExitOk;
}

int CmdDistance(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  Json out;
  out["to"] = config.to;
  if (config.to == "potential") {
    const EpsilonTransfer transfer = EpsilonTransferBound(game);
    out["distance"] = OutputValue(transfer.alpha);
    out["eps_bound"] = OutputValue(transfer.eps_bound);
  } else {
    out["distance"] = OutputValue(GameDistance(game, ClosestHarmonic(game)));
  }
  EmitJson(config, out);
  return kExitOk;
}

std::vector<int> ParseCounts(const std::string& text, int players) {
  std::vector<int> counts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int h = std::stoi(item, &used);
      if (used != item.size()) throw ParseError("bad strategy count: " + item);
      counts.push_back(h);
    } catch (const std::logic_error&) {
      throw ParseError("bad strategy count: " + item);
    }
  }
  if (counts.size() == 1 && players > 1) counts.assign(players, counts[0]);
  if (static_cast<int>(counts.size()) != players) {
    throw PreconditionError("expected " + std::to_string(players) +
                            " strategy counts");
  }
  return counts;
}

int CmdDims(const CliConfig& config) {
  const SubspaceDims d =
      ClosedFormDims(ParseCounts(config.counts, config.players));
  std::ostringstream out;
  out << "P=" << d.potential << " H=" << d.harmonic << " N=" << d.nonstrategic
      << "\n";
  Emit(config, out.str());
  return kExitOk;
}

int CmdVerify(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  const std::vector<InvariantCheck> checks =
      VerifyGame(game, config.tol, config.seed);
  std::ostringstream out;
  for (const InvariantCheck& c : checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name << " violation=" << c.violation
        << " limit=" << c.limit << "\n";
  }
  Emit(config, out.str());
  return AllPassed(checks) ? kExitOk : kExitNumeric;
}

int CmdExportFlow(const CliConfig& config) {
  const Game game = ReadGameFile(config.input);
  const GraphPtr graph = GameGraph::Build(game.shape());
  const EdgeFlow flow = PairwiseComparison(graph, game);
  if (config.format == "dot") {
    Emit(config, FlowToDot(game, flow));
    return kExitOk;
  }
  Json edges = Json::array();
  const auto values = flow.values();
  for (std::int64_t e = 0; e < graph->num_edges(); ++e) {
    const Edge edge = graph->EdgeAt(e);
    Json item;
    item["tail"] = game.shape().ProfileAt(edge.tail);
    item["head"] = game.shape().ProfileAt(edge.head);
    item["player"] = edge.player;
    item["value"] = OutputValue(values[e], std::max(1.0, flow.MaxAbs()));
    edges.push_back(std::move(item));
  }
  Json out;
  out["edges"] = std::move(edges);
  EmitJson(config, out);
  return kExitOk;
}

int Run(int argc, char** argv) {
  CLI::App app{"Potential / harmonic / nonstrategic decomposition of games"};
  app.require_subcommand(1);
  CliConfig config;
  app.add_option("--tol", config.tol, "Numerical tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized checks");
  app.add_option("--out", config.out, "Write output to this file");

  auto add_input = [&config](CLI::App* cmd) {
    cmd->add_option("input", config.input, "Game JSON file")->required();
  };

  CLI::App* decompose = app.add_subcommand("decompose", "Decompose a game");
  add_input(decompose);
  CLI::App* project =
      app.add_subcommand("project", "Closest potential or harmonic game");
  add_input(project);
  project->add_option("--onto", config.onto)
      ->check(CLI::IsMember({"potential", "harmonic"}));
  CLI::App* equilibria =
      app.add_subcommand("equilibria", "Equilibrium and efficiency report");
  add_input(equilibria);
  equilibria->add_option("--eps", config.eps)->check(CLI::NonNegativeNumber);
  CLI::App* pareto = app.add_subcommand("pareto", "Pareto optimal profiles");
  add_input(pareto);
  pareto->add_flag("--transform", config.transform,
                   "Apply the Pareto-aligning nonstrategic transform");
  CLI::App* distance =
      app.add_subcommand("distance", "Distance to the closest game of a class");
  add_input(distance);
  distance->add_option("--to", config.to)
      ->check(CLI::IsMember({"potential", "harmonic"}));
  CLI::App* dims = app.add_subcommand("dims", "Subspace dimensions");
  dims->add_option("players", config.players, "Number of players")
      ->required()
      ->check(CLI::PositiveNumber);
  dims->add_option("counts", config.counts, "Comma-separated strategy counts")
      ->required();
  CLI::App* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_input(verify);
  CLI::App* export_flow =
      app.add_subcommand("export-flow", "Export the pairwise comparison flow");
  add_input(export_flow);
  export_flow->add_option("--format", config.format)
      ->check(CLI::IsMember({"dot", "json"}));

  for (CLI::App* cmd : {decompose, project, equilibria, pareto, distance, dims,
                        verify, export_flow}) {
    cmd->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*decompose) return CmdDecompose(config);
    if (*project) return CmdProject(config);
    if (*equilibria) return CmdEquilibria(config);
    if (*pareto) return CmdPareto(config);
    if (*distance) return CmdDistance(config);
    if (*dims) return CmdDims(config);
    if (*verify) return CmdVerify(config);
    if (*export_flow) return CmdExportFlow(config);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitParse;
}

}  // namespace
}  // namespace gamehodge

int main(int argc, char** argv) { return gamehodge::Run(argc, argv); }

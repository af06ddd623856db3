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

#include "gamehodge/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gamehodge/errors.h"

namespace gamehodge {
namespace {

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", kOutputDigits, v);
  return buf;
}

Json ValuesToJson(std::span<const double> values, double scale) {
  Json out = Json::array();
  for (double v : values) out.push_back(OutputValue(v, scale));
  return out;
}

double GameScale(const Game& game) { return std::max(1.0, MaxAbsPayoff(game)); }

}  // namespace

double OutputValue(double v, double scale) {
  if (std::abs(v) < 1e-12 * std::max(1.0, scale)) return 0.0;
  return std::stod(FormatNumber(v));
}

Game GameFromJson(const Json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("game must be a JSON object");
    if (!doc.contains("players") || !doc["players"].is_array()) {
      throw ParseError("missing \"players\" array");
    }
    if (!doc.contains("utilities") || !doc["utilities"].is_array()) {
      throw ParseError("missing \"utilities\" array");
    }
    const Json& players = doc["players"];
    if (players.empty()) throw ParseError("a game needs at least one player");
    std::vector<int> counts;
    GameLabels labels;
    for (std::size_t m = 0; m < players.size(); ++m) {
      const Json& player = players[m];
      if (!player.is_object() || !player.contains("strategies") ||
          !player["strategies"].is_array()) {
        throw ParseError("player " + std::to_string(m) +
                         " needs a \"strategies\" array");
      }
      std::vector<std::string> names;
      for (const Json& s : player["strategies"]) {
        if (!s.is_string()) throw ParseError("strategy labels must be strings");
        names.push_back(s.get<std::string>());
      }
      if (names.empty()) {
        throw ParseError("player " + std::to_string(m) + " has no strategies");
      }
      counts.push_back(static_cast<int>(names.size()));
      labels.strategy_labels.push_back(std::move(names));
      if (player.contains("name")) {
        if (!player["name"].is_string()) {
          throw ParseError("player names must be strings");
        }
        labels.player_names.push_back(player["name"].get<std::string>());
      } else {
        labels.player_names.push_back("player" + std::to_string(m));
      }
    }
    const Json& utilities = doc["utilities"];
    if (utilities.size() != players.size()) {
      throw ParseError("expected one utility array per player");
    }
    StrategyShape shape(counts);
    std::vector<NodeFunction> u(players.size());
    for (std::size_t m = 0; m < players.size(); ++m) {
      const Json& row = utilities[m];
      if (!row.is_array() ||
          static_cast<std::int64_t>(row.size()) != shape.num_profiles()) {
        throw ParseError("utilities[" + std::to_string(m) + "] must have " +
                         std::to_string(shape.num_profiles()) + " entries");
      }
      u[m].reserve(row.size());
      for (const Json& v : row) {
        if (!v.is_number()) throw ParseError("utilities must be numbers");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ParseError("utilities must be finite");
        u[m].push_back(x);
      }
    }
    return Game(std::move(shape), std::move(u), std::move(labels));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Game ParseGame(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return GameFromJson(doc);
}

Game ReadGameFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

Json GameToJson(const Game& game) {
  const StrategyShape& shape = game.shape();
  const GameLabels& labels = game.labels();
  Json players = Json::array();
  for (int m = 0; m < shape.num_players(); ++m) {
    Json player;
    player["name"] = labels.player_names.empty()
                         ? "player" + std::to_string(m)
                         : labels.player_names[m];
    Json strategies = Json::array();
    for (int s = 0; s < shape.count(m); ++s) {
      strategies.push_back(labels.strategy_labels.empty()
                               ? std::to_string(s)
                               : labels.strategy_labels[m][s]);
    }
    player["strategies"] = std::move(strategies);
    players.push_back(std::move(player));
  }
  const double scale = GameScale(game);
  Json utilities = Json::array();
  for (int m = 0; m < shape.num_players(); ++m) {
    utilities.push_back(ValuesToJson(game.utilities(m), scale));
  }
  Json out;
  out["players"] = std::move(players);
  out["utilities"] = std::move(utilities);
  return out;
}

Json DecompositionToJson(const Decomposition& parts) {
  Json out;
  out["potential"] = GameToJson(parts.potential);
  out["harmonic"] = GameToJson(parts.harmonic);
  out["nonstrategic"] = GameToJson(parts.nonstrategic);
  double scale = 1.0;
  for (double v : parts.potential_fn) scale = std::max(scale, std::abs(v));
  out["phi"] = ValuesToJson(parts.potential_fn, scale);
  Json residuals;
  residuals["reconstruction"] = parts.residuals.reconstruction;
  residuals["harmonic_divergence"] = parts.residuals.harmonic_divergence;
  residuals["curl"] = parts.residuals.curl;
  out["residuals"] = std::move(residuals);
  return out;
}

Decomposition DecompositionFromJson(const Json& doc) {
  if (!doc.is_object() || !doc.contains("potential") ||
      !doc.contains("harmonic") || !doc.contains("nonstrategic")) {
    throw ParseError("decomposition needs potential, harmonic, nonstrategic");
  }
  Decomposition out{GameFromJson(doc["potential"]),
                    GameFromJson(doc["harmonic"]),
                    GameFromJson(doc["nonstrategic"]),
                    {},
                    {}};
  if (doc.contains("phi") && doc["phi"].is_array()) {
    for (const Json& v : doc["phi"]) {
      if (!v.is_number()) throw ParseError("phi must be numbers");
      out.potential_fn.push_back(v.get<double>());
    }
  }
  return out;
}

Json ProfilesToJson(const StrategyShape& shape, const ProfileSet& profiles) {
  Json out = Json::array();
  for (ProfileIndex p : profiles) out.push_back(shape.ProfileAt(p));
  return out;
}

Json EquilibriumReportToJson(const Game& game, const EquilibriumReport& report) {
  Json out;
  out["pure_nash"] = ProfilesToJson(game.shape(), report.pure_nash);
  out["epsilon"] = OutputValue(report.epsilon);
  out["epsilon_equilibria"] =
      ProfilesToJson(game.shape(), report.epsilon_equilibria);
  out["pareto_optimal"] = ProfilesToJson(game.shape(), report.pareto_optimal);
  out["uniform_mixed_is_ne"] = report.uniform_mixed_is_ne;
  if (report.correlated_dim) {
    out["correlated_dim"] = *report.correlated_dim;
  } else {
    out["correlated_dim"] = nullptr;
  }
  return out;
}

Json BasisToJson(const SubspaceBasis& basis) {
  Json manifest;
  manifest["tag"] = TagName(basis.tag);
  manifest["shape"] = basis.shape.counts();
  manifest["count"] = basis.games.size();
  if (!basis.warning.empty()) manifest["warning"] = basis.warning;
  Json games = Json::array();
  for (const Game& g : basis.games) games.push_back(GameToJson(g));
  Json out;
  out["manifest"] = std::move(manifest);
  out["games"] = std::move(games);
  return out;
}

std::string ProfileName(const Game& game, ProfileIndex p) {
  const StrategyShape& shape = game.shape();
  const GameLabels& labels = game.labels();
  std::string out = "(";
  for (int m = 0; m < shape.num_players(); ++m) {
    if (m > 0) out += ",";
    const int s = shape.Coordinate(p, m);
    out += labels.strategy_labels.empty() ? std::to_string(s)
                                          : labels.strategy_labels[m][s];
  }
  return out + ")";
}

std::string FlowToDot(const Game& game, const EdgeFlow& flow) {
  const GameGraph& graph = flow.graph();
  if (!(graph.shape() == game.shape())) {
    throw ShapeError("flow and game have different shapes");
  }
  const double scale = std::max(1.0, flow.MaxAbs());
  std::ostringstream out;
  out << "digraph game_flow {\n";
  for (ProfileIndex p = 0; p < graph.num_nodes(); ++p) {
    out << "  n" << p << " [label=\"" << ProfileName(game, p) << "\"];\n";
  }
  const auto values = flow.values();
  for (std::int64_t e = 0; e < graph.num_edges(); ++e) {
    const double v = OutputValue(values[e], scale);
    if (v == 0.0) continue;
    const Edge edge = graph.EdgeAt(e);
    const ProfileIndex from = v > 0.0 ? edge.tail : edge.head;
    const ProfileIndex to = v > 0.0 ? edge.head : edge.tail;
    out << "  n" << from << " -> n" << to << " [label=\""
        << FormatNumber(std::abs(v)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("failed writing " + path);
}

}  // namespace gamehodge

// Copyright 2026 The Dominance Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "domlab/game_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "domlab/errors.hpp"

namespace domlab {
namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational leaf_value(const Json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    return Rational::parse(value.get<std::string>());
  }
  throw GameFormatError("malformed rational at " + where +
                        ": expected an integer or a \"p/q\" string, got " +
                        value.dump());
}

void collect_payoffs(const Json& node, std::size_t depth,
                     const std::vector<PlayerSpec>& players,
                     const std::string& where,
                     std::vector<std::vector<Rational>>& out) {
  const std::size_t n = players.size();
  if (!node.is_array()) {
    throw GameFormatError("shape mismatch at " + where + ": expected an array");
  }
  if (depth == n) {
    if (node.size() != n) {
      throw GameFormatError("shape mismatch at " + where + ": expected " +
                            std::to_string(n) + " payoffs, got " +
                            std::to_string(node.size()));
    }
    std::vector<Rational> leaf;
    leaf.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      leaf.push_back(leaf_value(node[i], where + "[" + std::to_string(i) + "]"));
    }
    out.push_back(std::move(leaf));
    return;
  }
  const std::size_t expected = players[depth].strategies.size();
  if (node.size() != expected) {
    throw GameFormatError("shape mismatch at " + where + ": expected " +
                          std::to_string(expected) + " entries for player \"" +
                          players[depth].name + "\", got " +
                          std::to_string(node.size()));
  }
  for (std::size_t k = 0; k < expected; ++k) {
    collect_payoffs(node[k], depth + 1, players,
                    where + "[" + std::to_string(k) + "]", out);
  }
}

}  // namespace

GamePtr parse_game(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON at line " + std::to_string(line) +
                         ", column " + std::to_string(column) + ": " +
                         e.what(),
                     line, column);
  }
  return game_from_json(doc);
}

GamePtr game_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("players") ||
      !doc["players"].is_array()) {
    throw GameFormatError("game document needs a \"players\" array");
  }
  if (!doc.contains("payoffs")) {
    throw GameFormatError("game document needs a \"payoffs\" array");
  }
  std::vector<PlayerSpec> players;
  for (const auto& p : doc["players"]) {
    if (!p.is_object() || !p.contains("name") || !p["name"].is_string() ||
        !p.contains("strategies") || !p["strategies"].is_array()) {
      throw GameFormatError(
          "each player needs a string \"name\" and a \"strategies\" array");
    }
    PlayerSpec spec;
    spec.name = p["name"].get<std::string>();
    for (const auto& s : p["strategies"]) {
      if (!s.is_string()) {
        throw GameFormatError("strategy names of player \"" + spec.name +
                              "\" must be strings");
      }
      spec.strategies.push_back(s.get<std::string>());
    }
    players.push_back(std::move(spec));
  }
  if (players.size() < 2) {
    throw GameFormatError("a game needs at least two players");
  }
  for (const auto& p : players) {
    if (p.strategies.empty()) {
      throw GameFormatError("player \"" + p.name + "\" has no strategies");
    }
  }
  std::vector<std::vector<Rational>> payoffs;
  collect_payoffs(doc["payoffs"], 0, players, "payoffs", payoffs);
  return make_game(std::move(players), std::move(payoffs));
}

GamePtr load_game(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open game file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

Json game_to_json(const Game& game) {
  Json doc;
  Json players = Json::array();
  for (const auto& p : game.players()) {
    players.push_back(Json{{"name", p.name}, {"strategies", p.strategies}});
  }
  doc["players"] = std::move(players);

  const std::size_t n = game.player_count();
  // Build the nested tensor bottom-up, last player innermost.
  std::vector<Json> level;
  level.reserve(game.profile_count());
  for (std::size_t flat = 0; flat < game.profile_count(); ++flat) {
    Json leaf = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      const Rational& v = game.payoff_at(i, flat);
      if (v.is_integer() && v.get().get_num().fits_slong_p()) {
        leaf.push_back(v.get().get_num().get_si());
      } else {
        leaf.push_back(v.to_string());
      }
    }
    level.push_back(std::move(leaf));
  }
  for (std::size_t i = n; i > 0; --i) {
    const std::size_t width = game.strategy_count(i - 1);
    std::vector<Json> next;
    for (std::size_t k = 0; k < level.size(); k += width) {
      Json group = Json::array();
      for (std::size_t j = 0; j < width; ++j) {
        group.push_back(std::move(level[k + j]));
      }
      next.push_back(std::move(group));
    }
    level = std::move(next);
  }
  doc["payoffs"] = std::move(level.front());
  return doc;
}

Json restriction_to_json(const Restriction& restriction) {
  Json out = Json::array();
  for (std::size_t i = 0; i < restriction.player_count(); ++i) {
    Json names = Json::array();
    for (StrategyIndex s : restriction.kept(i)) {
      names.push_back(restriction.game().strategy_name(i, s));
    }
    out.push_back(std::move(names));
  }
  return out;
}

Restriction parse_restriction(const GamePtr& game, std::string_view text) {
  std::vector<std::vector<StrategyIndex>> kept;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(';', start);
    const std::string_view part = text.substr(start, end - start);
    const PlayerIndex player = kept.size();
    if (player >= game->player_count()) {
      throw InvalidProfileError("restriction names more components than the "
                                "game has players");
    }
    std::vector<StrategyIndex> set;
    std::size_t s = 0;
    while (s <= part.size() && !part.empty()) {
      const auto comma = part.find(',', s);
      std::string name(part.substr(s, comma - s));
      set.push_back(game->strategy_index(player, name));
      if (comma == std::string_view::npos) break;
      s = comma + 1;
    }
    kept.push_back(std::move(set));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (kept.size() != game->player_count()) {
    throw InvalidProfileError("restriction needs " +
                              std::to_string(game->player_count()) +
                              " ';'-separated components");
  }
  return Restriction(game, std::move(kept));
}

std::string restriction_to_string(const Restriction& restriction) {
  std::string out;
  for (std::size_t i = 0; i < restriction.player_count(); ++i) {
    if (i > 0) out += " x ";
    out += "{";
    bool first = true;
    for (StrategyIndex s : restriction.kept(i)) {
      if (!first) out += ",";
      first = false;
      out += restriction.game().strategy_name(i, s);
    }
    out += "}";
  }
  return out;
}

}  // namespace domlab

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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "domlab/game.hpp"

namespace domlab {

using Json = nlohmann::ordered_json;

// Game file format:
//
//   {
//     "players": [{"name": "Row", "strategies": ["A", "B"]}, ...],
//     "payoffs": [[[1, 0]], [[0, 0]]]
//   }
//
// `payoffs` nests one array level per player in player order; each leaf is
// an array of n payoffs, given as JSON integers or strings of the form
// "-?digits/digits" (or "-?digits").
//
// Throws ParseError (with line and column) on invalid JSON and
// GameFormatError on structural problems.
GamePtr parse_game(std::string_view text);
GamePtr game_from_json(const Json& doc);
// Throws Error when the file cannot be read.
GamePtr load_game(const std::filesystem::path& path);

Json game_to_json(const Game& game);

// Kept sets by strategy name: [["A", "B"], ["X"]].
Json restriction_to_json(const Restriction& restriction);
// Parses "A,B;X" (players separated by ';', strategies by ','); an empty
// component keeps nothing. Throws InvalidProfileError on unknown names.
Restriction parse_restriction(const GamePtr& game, std::string_view text);
// "{A,B} x {X}".
std::string restriction_to_string(const Restriction& restriction);

}  // namespace domlab

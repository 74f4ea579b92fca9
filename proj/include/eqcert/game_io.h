// Copyright 2026 The eqcert Authors
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

#ifndef EQCERT_GAME_IO_H_
#define EQCERT_GAME_IO_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "eqcert/game.h"

namespace eqcert {

using Json = nlohmann::json;

// Game file:
//   {"name": str?, "players": n, "actions": [[str, ...], ...],
//    "payoffs": [[rat, ...], ...]}
// where payoffs[i][k] is u_i at profile k and rat is "p/q" or a finite
// decimal string. Throws std::invalid_argument on malformed input.
Game GameFromJson(const Json& j);
Json GameToJson(const Game& game);

Game LoadGame(std::string_view text);
// Canonical text: two-space indented JSON with rationals in lowest terms and
// a trailing newline. LoadGame(SaveGame(g)) == g, and SaveGame is a fixed
// point on its own output.
std::string SaveGame(const Game& game);

Game ReadGameFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

// Rationals travel as strings.
Json RationalToJson(const Rational& value);
Rational RationalFromJson(const Json& j);
Json RationalsToJson(const RationalVector& values);
RationalVector RationalsFromJson(const Json& j);

// {"<profile index>": "p/q", ...} listing the non-zero entries.
Json DistributionToJson(const JointDistribution& mu);
JointDistribution DistributionFromJson(const Json& j, int num_profiles);

}  // namespace eqcert

#endif  // EQCERT_GAME_IO_H_

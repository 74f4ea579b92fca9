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

#include "eqcert/game_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eqcert {

Json RationalToJson(const Rational& value) { return ToString(value); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

Json RationalsToJson(const RationalVector& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(RationalToJson(v));
  return out;
}

RationalVector RationalsFromJson(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  RationalVector out;
  for (const Json& x : j) out.push_back(RationalFromJson(x));
  return out;
}

Game GameFromJson(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("game must be an object");
  for (const char* key : {"players", "actions", "payoffs"}) {
    if (!j.contains(key)) {
      throw std::invalid_argument(std::string("game is missing '") + key + "'");
    }
  }
  if (!j["players"].is_number_integer()) {
    throw std::invalid_argument("'players' must be an integer");
  }
  const int n = j["players"].get<int>();
  const Json& actions = j["actions"];
  const Json& payoffs = j["payoffs"];
  if (!actions.is_array() || static_cast<int>(actions.size()) != n) {
    throw std::invalid_argument("'actions' must list one array per player");
  }
  if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != n) {
    throw std::invalid_argument("'payoffs' must list one array per player");
  }
  std::vector<std::vector<std::string>> labels;
  for (const Json& a : actions) {
    if (!a.is_array()) throw std::invalid_argument("action list not an array");
    std::vector<std::string> l;
    for (const Json& s : a) {
      if (!s.is_string()) throw std::invalid_argument("action label not a string");
      l.push_back(s.get<std::string>());
    }
    labels.push_back(std::move(l));
  }
  std::vector<RationalVector> u;
  for (const Json& row : payoffs) u.push_back(RationalsFromJson(row));
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw std::invalid_argument("'name' not a string");
    name = j["name"].get<std::string>();
  }
  return Game(std::move(labels), std::move(u), std::move(name));
}

Json GameToJson(const Game& game) {
  Json j;
  if (!game.name().empty()) j["name"] = game.name();
  j["players"] = game.num_players();
  j["actions"] = game.action_labels();
  Json payoffs = Json::array();
  for (int i = 0; i < game.num_players(); ++i) {
    payoffs.push_back(RationalsToJson(game.payoffs(i)));
  }
  j["payoffs"] = std::move(payoffs);
  return j;
}

Game LoadGame(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  return GameFromJson(j);
}

std::string SaveGame(const Game& game) { return GameToJson(game).dump(2) + "\n"; }

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Game ReadGameFile(const std::string& path) { return LoadGame(ReadTextFile(path)); }

Json DistributionToJson(const JointDistribution& mu) {
  Json j = Json::object();
  for (int k = 0; k < mu.size(); ++k) {
    if (sgn(mu[k]) != 0) j[std::to_string(k)] = ToString(mu[k]);
  }
  return j;
}

JointDistribution DistributionFromJson(const Json& j, int num_profiles) {
  if (!j.is_object()) throw std::invalid_argument("distribution must be an object");
  RationalVector p(num_profiles, Rational(0));
  for (const auto& [key, value] : j.items()) {
    int k = -1;
    try {
      size_t used = 0;
      k = std::stoi(key, &used);
      if (used != key.size()) k = -1;
    } catch (const std::exception&) {
      k = -1;
    }
    if (k < 0 || k >= num_profiles) {
      throw std::invalid_argument("bad profile index '" + key + "'");
    }
    p[k] = RationalFromJson(value);
  }
  return JointDistribution(std::move(p));
}

}  // namespace eqcert

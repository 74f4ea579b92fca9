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

#include "eqcert/generators.h"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace eqcert {

namespace {

Game TwoPlayer(std::vector<std::string> rows, std::vector<std::string> cols,
               const std::vector<std::vector<long>>& u1,
               const std::vector<std::vector<long>>& u2, std::string name) {
  RationalVector p1, p2;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < cols.size(); ++c) {
      p1.push_back(Rational(u1[r][c]));
      p2.push_back(Rational(u2[r][c]));
    }
  }
  return Game({std::move(rows), std::move(cols)}, {std::move(p1), std::move(p2)},
              std::move(name));
}

}  // namespace

Game PrisonersDilemma() {
  return TwoPlayer({"c", "d"}, {"c", "d"}, {{2, 0}, {3, 1}}, {{2, 3}, {0, 1}},
                   "prisoners_dilemma");
}

Game MatchingPennies() {
  return TwoPlayer({"heads", "tails"}, {"heads", "tails"}, {{1, -1}, {-1, 1}},
                   {{-1, 1}, {1, -1}}, "matching_pennies");
}

Game RockPaperScissors() {
  std::vector<std::vector<long>> u1 = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  std::vector<std::vector<long>> u2(3, std::vector<long>(3));
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) u2[r][c] = -u1[r][c];
  }
  return TwoPlayer({"rock", "paper", "scissors"}, {"rock", "paper", "scissors"},
                   u1, u2, "rock_paper_scissors");
}

Game Parking(int m, const Rational& v, const Rational& c, const Rational& t) {
  if (m < 3) throw std::invalid_argument("parking needs m >= 3");
  if (sgn(c) <= 0) throw std::invalid_argument("parking needs c > 0");
  if (sgn(t) <= 0) throw std::invalid_argument("parking needs t > 0");
  std::vector<std::string> labels = {"pay"};
  for (int i = 1; i <= m; ++i) labels.push_back("l" + std::to_string(i));
  const int k = m + 1;
  RationalVector u1(k * k), u2(k * k);
  for (int r = 0; r < k; ++r) {
    for (int s = 0; s < k; ++s) {
      Rational& x = u1[r * k + s];
      Rational& y = u2[r * k + s];
      if (r == 0 && s == 0) {
        x = v - c;
        y = v - c;
      } else if (r == 0) {
        x = v - c;
        y = v - t;
      } else if (s == 0) {
        x = v - t;
        y = v - c;
      } else if (r == s) {
        x = v - t / 2;
        y = v - t / 2;
      } else {
        // The inspector reaches the first driver's spot before the second's
        // with probability ((s - r) mod m) / m.
        int gap = ((s - r) % m + m) % m;
        Rational second_caught(gap, m);
        second_caught.canonicalize();
        x = v - (1 - second_caught) * t;
        y = v - second_caught * t;
      }
    }
  }
  return Game({labels, labels}, {std::move(u1), std::move(u2)},
              "parking_m" + std::to_string(m));
}

Game MatchingPenniesType(const Rational& a, const Rational& b,
                         const Rational& c, const Rational& d,
                         const Rational& e, const Rational& f,
                         const Rational& g, const Rational& h) {
  if (!(a > c)) throw std::invalid_argument("matching-pennies type needs a > c");
  if (!(d > b)) throw std::invalid_argument("matching-pennies type needs d > b");
  if (!(f > e)) throw std::invalid_argument("matching-pennies type needs f > e");
  if (!(g > h)) throw std::invalid_argument("matching-pennies type needs g > h");
  return Game({{"a1", "b1"}, {"a2", "b2"}}, {{a, b, c, d}, {e, f, g, h}},
              "matching_pennies_type");
}

Game TwoEquilibriumDegenerateGame() {
  return TwoPlayer({"a1", "b1"}, {"a2", "b2"}, {{1, 1}, {0, 1}},
                   {{1, 0}, {1, 1}}, "two_equilibrium_degenerate");
}

Game GuaranteedUtilityCounterexample() {
  return TwoPlayer({"a1", "b1", "c1"}, {"a2", "b2", "c2"},
                   {{0, 0, 0}, {-1, 2, -1}, {-1, -1, -1}},
                   {{0, -1, -1}, {0, -1, -1}, {0, -1, 2}},
                   "guaranteed_utility_counterexample");
}

namespace {

std::vector<std::vector<std::string>> DefaultLabels(
    const std::vector<int>& shape) {
  std::vector<std::vector<std::string>> labels;
  for (size_t i = 0; i < shape.size(); ++i) {
    std::vector<std::string> l;
    for (int a = 0; a < shape[i]; ++a) l.push_back("a" + std::to_string(a));
    labels.push_back(std::move(l));
  }
  return labels;
}

int NumProfiles(const std::vector<int>& shape) {
  int total = 1;
  for (int s : shape) total *= s;
  return total;
}

}  // namespace

Game ZeroGame(const std::vector<int>& shape) {
  int np = NumProfiles(shape);
  return Game(DefaultLabels(shape),
              std::vector<RationalVector>(shape.size(),
                                          RationalVector(np, Rational(0))),
              "zero_game");
}

Game RandomGame(const std::vector<int>& shape, std::uint64_t seed, int lo,
                int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  int np = NumProfiles(shape);
  std::vector<RationalVector> u(shape.size(), RationalVector(np));
  for (auto& row : u) {
    for (Rational& x : row) x = dist(rng);
  }
  return Game(DefaultLabels(shape), std::move(u),
              "random_" + std::to_string(seed));
}

Game RandomSymmetricGame(int num_players, int num_actions, std::uint64_t seed,
                         int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  std::vector<int> shape(num_players, num_actions);
  Game skeleton = ZeroGame(shape);
  std::map<std::pair<int, std::vector<int>>, Rational> table;
  std::vector<RationalVector> u(num_players,
                                RationalVector(skeleton.num_profiles()));
  for (int k = 0; k < skeleton.num_profiles(); ++k) {
    Profile a = skeleton.ProfileFromIndex(k);
    for (int i = 0; i < num_players; ++i) {
      std::vector<int> others;
      for (int j = 0; j < num_players; ++j) {
        if (j != i) others.push_back(a[j]);
      }
      std::sort(others.begin(), others.end());
      auto key = std::make_pair(a[i], others);
      auto it = table.find(key);
      if (it == table.end()) {
        it = table.emplace(key, Rational(dist(rng))).first;
      }
      u[i][k] = it->second;
    }
  }
  return Game(DefaultLabels(shape), std::move(u),
              "random_symmetric_" + std::to_string(seed));
}

Game RandomMatchingPenniesType(std::uint64_t seed, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(lo, hi);
  auto ordered_pair = [&](Rational& high, Rational& low) {
    do {
      high = dist(rng);
      low = dist(rng);
    } while (!(high > low));
  };
  Rational a, b, c, d, e, f, g, h;
  ordered_pair(a, c);
  ordered_pair(d, b);
  ordered_pair(f, e);
  ordered_pair(g, h);
  Game game = MatchingPenniesType(a, b, c, d, e, f, g, h);
  return Game(game.action_labels(), game.payoff_table(),
              "matching_pennies_type_" + std::to_string(seed));
}

}  // namespace eqcert

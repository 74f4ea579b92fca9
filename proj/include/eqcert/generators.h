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

#ifndef EQCERT_GENERATORS_H_
#define EQCERT_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "eqcert/game.h"

namespace eqcert {

// Actions {c, d}: (c,c)=(2,2), (c,d)=(0,3), (d,c)=(3,0), (d,d)=(1,1).
Game PrisonersDilemma();
// Heads/Tails with +1/-1 payoffs; player 0 wants to match.
Game MatchingPennies();
Game RockPaperScissors();

// Two drivers on a loop with m parking spots. Actions are "pay" followed by
// "l1".."lm" (park without paying at that spot). Requires m >= 3, c > 0,
// t > 0.
Game Parking(int m, const Rational& v, const Rational& c, const Rational& t);

// 2x2 game with rows (a1, b1), columns (a2, b2):
//   (a1,a2)=(a,e) (a1,b2)=(b,f) (b1,a2)=(c,g) (b1,b2)=(d,h).
// Requires a > c, d > b, f > e, g > h.
Game MatchingPenniesType(const Rational& a, const Rational& b,
                         const Rational& c, const Rational& d,
                         const Rational& e, const Rational& f,
                         const Rational& g, const Rational& h);

// 2x2 game with two non-strict pure equilibria whose hull is the whole
// individually rational set.
Game TwoEquilibriumDegenerateGame();
// 3x3 game where (a1, a2) is the only guaranteed-utility profile while the
// lottery 1/2 (b1,b2) + 1/2 (c1,c2) Pareto-dominates it.
Game GuaranteedUtilityCounterexample();

// All payoffs zero.
Game ZeroGame(const std::vector<int>& shape);

// Integer payoffs drawn uniformly from [lo, hi] with a seeded mt19937_64.
Game RandomGame(const std::vector<int>& shape, std::uint64_t seed, int lo,
                int hi);

// Symmetric game: payoff depends on own action and the multiset of the
// others' actions.
Game RandomSymmetricGame(int num_players, int num_actions, std::uint64_t seed,
                         int lo, int hi);

// Random instance of MatchingPenniesType with integer entries in [lo, hi].
Game RandomMatchingPenniesType(std::uint64_t seed, int lo, int hi);

}  // namespace eqcert

#endif  // EQCERT_GENERATORS_H_
